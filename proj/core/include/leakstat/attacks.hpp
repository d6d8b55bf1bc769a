#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "leakstat/cooc.hpp"
#include "leakstat/leakage.hpp"

namespace leakstat {

// Query-recovery output: one predicted keyword per observed token plus a
// certainty score. `known_tokens` records the tokens that were known before
// the attack ran, so accuracy can exclude them.
struct Prediction {
  std::unordered_map<std::uint32_t, std::uint32_t> keyword_of;
  std::unordered_map<std::uint32_t, double> certainty;
  std::vector<std::uint32_t> known_tokens;
};

struct IhopParams {
  int n_iters = 500;
  double p_free = 0.25;
  double smoothing = 1.0;  // Laplace constant
};

// Nearest-co-occurrence-vector attack seeded by known queries. Predictions
// are independent per token and need not be injective.
Prediction score_attack(const LeakageView& view, const CoocMatrix& c_atk);

// Iterated score attack: each round promotes the ref_speed most certain
// unknown tokens into the known set.
Prediction refined_score_attack(const LeakageView& view,
                                const CoocMatrix& c_atk, int ref_speed = 10);

// Iterative linear-assignment attack on volume and co-occurrence
// log-likelihoods; requires no known queries. Assignment-based, so the
// prediction is injective.
Prediction ihop_attack(const LeakageView& view, const CoocMatrix& c_atk,
                       const IhopParams& params, std::uint64_t seed);

// Fraction of correctly mapped tokens; initially-known tokens are excluded
// when the flag is set.
double accuracy(const Prediction& pred, const GroundTruth& truth,
                bool exclude_known = true);

}  // namespace leakstat
