#pragma once

#include <cstdint>

#include "leakstat/corpus.hpp"

namespace leakstat {

enum class SplitMethod { uniform, temporal };

// Disjoint (attacker, indexed) corpus pair over one shared universe.
struct SplitPair {
  Corpus atk;
  Corpus ind;
  SplitMethod method = SplitMethod::uniform;
  std::uint64_t seed = 0;     // uniform only
  std::int64_t cutoff = 0;    // temporal only
};

// Draws n_atk + n_ind documents without replacement uniformly at random;
// the first n_atk go to atk, the rest to ind. Documents not drawn are
// discarded.
SplitPair split_uniform(const Corpus& corpus, std::size_t n_atk,
                        std::size_t n_ind, std::uint64_t seed);

// atk = documents strictly before the cutoff, ind = the rest.
SplitPair split_temporal(const Corpus& corpus, std::int64_t cutoff);

}  // namespace leakstat
