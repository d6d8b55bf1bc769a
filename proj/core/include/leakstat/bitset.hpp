#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace leakstat {

// Fixed-length bitset sized at runtime; backs document keyword-membership
// vectors and posting lists.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  std::size_t count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
  }

  std::vector<std::uint32_t> set_positions() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w != 0) {
        const int bit = std::countr_zero(w);
        out.push_back(static_cast<std::uint32_t>(wi * 64 + bit));
        w &= w - 1;
      }
    }
    return out;
  }

  // |a & b|; both bitsets must have the same length.
  static std::size_t intersection_count(const Bitset& a, const Bitset& b) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      total += std::popcount(a.words_[i] & b.words_[i]);
    return total;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace leakstat
