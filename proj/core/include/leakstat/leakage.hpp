#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "leakstat/cooc.hpp"
#include "leakstat/corpus.hpp"

namespace leakstat {

// Simulated SSE inverted index. Query tokens are opaque integers drawn as a
// seeded permutation of the keyword indices, so they reveal nothing about
// keyword order. Posting lists hold internal document ordinals; `doc_ids`
// maps ordinals back to external identifiers (including padding dummies).
struct SimulatedIndex {
  std::shared_ptr<const KeywordUniverse> universe;
  std::vector<std::uint32_t> token_of;  // keyword index -> token id
  std::vector<std::vector<std::uint32_t>> postings;  // per keyword, sorted
  std::vector<std::string> doc_ids;
  std::size_t n_ind = 0;  // true document count (excludes dummies)
  int padding_g = 1;

  std::size_t m() const { return token_of.size(); }
};

struct KnownQuery {
  std::uint32_t token;
  std::uint32_t keyword;
};

// What the honest-but-curious server hands the attacker: l distinct query
// tokens, their result-id sets, the l x l query co-occurrence matrix, the
// index size, and any known (token, keyword) pairs.
struct LeakageView {
  std::vector<std::uint32_t> queries;  // distinct token ids, ascending
  std::vector<std::vector<std::uint32_t>> results;  // per query, ordinals
  std::vector<std::string> doc_ids;    // ordinal -> external id
  std::vector<std::int64_t> qcooc;     // l*l, row-major
  std::size_t n_ind = 0;
  std::vector<KnownQuery> known;

  std::size_t l() const { return queries.size(); }
  std::int64_t qcooc_at(std::size_t a, std::size_t b) const {
    return qcooc[a * queries.size() + b];
  }
};

// token id -> keyword index for every observed query; used only for scoring.
struct GroundTruth {
  std::unordered_map<std::uint32_t, std::uint32_t> keyword_of;
};

// Builds the inverted index over `ind`. With padding_g > 1 every non-empty
// posting list is padded to a multiple of padding_g with distinct documents
// that do not contain the keyword (fresh dummy ids if those run out).
SimulatedIndex build_index(const Corpus& ind, std::uint64_t seed,
                           int padding_g = 1);

// Selects l distinct keywords uniformly without replacement and emits their
// leakage. l = m observes every keyword (the conservative default).
std::pair<LeakageView, GroundTruth> observe_queries(const SimulatedIndex& index,
                                                    std::size_t l,
                                                    std::uint64_t seed);

// Returns the view with `known` = k uniformly chosen (token, keyword) pairs.
LeakageView select_known_queries(const LeakageView& view,
                                 const GroundTruth& truth, std::size_t k,
                                 std::uint64_t seed);

// JSON serialization so attacks can run out of process. qcooc is derived
// from the result sets on load rather than stored.
void save_leakage_json(const LeakageView& view, const std::string& path);
LeakageView load_leakage_json(const std::string& path);

}  // namespace leakstat
