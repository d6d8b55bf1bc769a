#include "leakstat/attacks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "leakstat/assignment.hpp"
#include "leakstat/rng.hpp"

namespace leakstat {
namespace {

constexpr double kDistanceFloor = 1e-12;  // keeps -ln finite on exact matches
constexpr double kInf = std::numeric_limits<double>::infinity();

struct TokenScore {
  std::uint32_t keyword = 0;
  double certainty = 0.0;
};

void check_attack_inputs(const LeakageView& view, const CoocMatrix& c_atk) {
  if (c_atk.n < 1)
    throw EmptyDatasetError("attacker co-occurrence matrix has n = 0");
  if (view.n_ind < 1)
    throw EmptyDatasetError("leakage view has n_ind = 0");
  for (const KnownQuery& kq : view.known)
    if (kq.keyword >= c_atk.m)
      throw DimensionMismatchError("known keyword index out of range");
}

// One scoring pass: for every token not in `known`, the keyword whose
// co-occurrence signature (restricted to the known keywords) is nearest to
// the token's signature, plus the best-minus-second-best certainty margin.
std::unordered_map<std::uint32_t, TokenScore> score_pass(
    const LeakageView& view, const CoocMatrix& c_atk,
    const std::vector<KnownQuery>& known) {
  const std::size_t l = view.l();
  const std::size_t m = c_atk.m;
  const double n_ind = static_cast<double>(view.n_ind);
  const double n_atk = static_cast<double>(c_atk.n);

  std::unordered_map<std::uint32_t, std::size_t> pos_of;
  pos_of.reserve(l);
  for (std::size_t a = 0; a < l; ++a) pos_of.emplace(view.queries[a], a);

  const std::size_t k = known.size();
  std::vector<std::size_t> known_pos(k);
  std::vector<std::uint32_t> known_kw(k);
  for (std::size_t t = 0; t < k; ++t) {
    known_pos[t] = pos_of.at(known[t].token);
    known_kw[t] = known[t].keyword;
  }

  // Keyword signatures over the known columns.
  std::vector<double> kw_sig(m * k);
  for (std::size_t w = 0; w < m; ++w)
    for (std::size_t t = 0; t < k; ++t)
      kw_sig[w * k + t] =
          static_cast<double>(c_atk.at(w, known_kw[t])) / n_atk;

  std::vector<char> is_known_token(l, 0);
  for (std::size_t t = 0; t < k; ++t) is_known_token[known_pos[t]] = 1;

  std::unordered_map<std::uint32_t, TokenScore> out;
  std::vector<double> v(k);
  for (std::size_t a = 0; a < l; ++a) {
    if (is_known_token[a]) continue;
    for (std::size_t t = 0; t < k; ++t)
      v[t] = static_cast<double>(view.qcooc_at(a, known_pos[t])) / n_ind;

    double best = -kInf, second = -kInf;
    std::uint32_t best_kw = 0;
    for (std::size_t w = 0; w < m; ++w) {
      double dist_sq = 0.0;
      for (std::size_t t = 0; t < k; ++t) {
        const double d = v[t] - kw_sig[w * k + t];
        dist_sq += d * d;
      }
      const double score = -std::log(std::sqrt(dist_sq) + kDistanceFloor);
      if (score > best) {
        second = best;
        best = score;
        best_kw = static_cast<std::uint32_t>(w);
      } else if (score > second) {
        second = score;
      }
    }
    const double certainty = (second == -kInf) ? kInf : best - second;
    out.emplace(view.queries[a], TokenScore{best_kw, certainty});
  }
  return out;
}

Prediction finish_prediction(
    const LeakageView& view,
    const std::unordered_map<std::uint32_t, TokenScore>& scores,
    const std::vector<KnownQuery>& initial_known) {
  Prediction pred;
  for (const KnownQuery& kq : initial_known) {
    pred.keyword_of[kq.token] = kq.keyword;
    pred.certainty[kq.token] = kInf;
    pred.known_tokens.push_back(kq.token);
  }
  for (const auto& [token, ts] : scores) {
    pred.keyword_of[token] = ts.keyword;
    pred.certainty[token] = ts.certainty;
  }
  (void)view;
  return pred;
}

}  // namespace

Prediction score_attack(const LeakageView& view, const CoocMatrix& c_atk) {
  if (view.known.empty())
    throw NoKnownQueriesError("score attack needs at least one known query");
  check_attack_inputs(view, c_atk);
  return finish_prediction(view, score_pass(view, c_atk, view.known),
                           view.known);
}

Prediction refined_score_attack(const LeakageView& view,
                                const CoocMatrix& c_atk, int ref_speed) {
  if (view.known.empty())
    throw NoKnownQueriesError("refined score attack needs known queries");
  if (ref_speed < 1) throw DomainError("ref_speed must be >= 1");
  check_attack_inputs(view, c_atk);

  std::vector<KnownQuery> known = view.known;
  std::unordered_map<std::uint32_t, TokenScore> final_scores;

  while (known.size() < view.l()) {
    auto scores = score_pass(view, c_atk, known);
    // Promote the ref_speed most certain predictions (ties: lowest token).
    std::vector<std::uint32_t> order;
    order.reserve(scores.size());
    for (const auto& [token, ts] : scores) order.push_back(token);
    std::sort(order.begin(), order.end(),
              [&scores](std::uint32_t a, std::uint32_t b) {
                const double ca = scores.at(a).certainty;
                const double cb = scores.at(b).certainty;
                if (ca != cb) return ca > cb;
                return a < b;
              });
    const std::size_t take =
        std::min<std::size_t>(static_cast<std::size_t>(ref_speed),
                              order.size());
    for (std::size_t i = 0; i < take; ++i) {
      const std::uint32_t token = order[i];
      known.push_back({token, scores.at(token).keyword});
      final_scores[token] = scores.at(token);
    }
  }
  return finish_prediction(view, final_scores, view.known);
}

Prediction ihop_attack(const LeakageView& view, const CoocMatrix& c_atk,
                       const IhopParams& params, std::uint64_t seed) {
  check_attack_inputs(view, c_atk);
  const std::size_t l = view.l();
  const std::size_t m = c_atk.m;
  if (l > m)
    throw InfeasibleError("observed more queries than keywords: l = " +
                          std::to_string(l) + " > m = " + std::to_string(m));
  if (params.n_iters < 0) throw DomainError("n_iters must be >= 0");
  if (!(params.p_free > 0.0 && params.p_free <= 1.0))
    throw DomainError("p_free must lie in (0, 1]");
  if (!(params.smoothing > 0.0))
    throw DomainError("smoothing must be > 0");

  const double n_ind = static_cast<double>(view.n_ind);
  const double s = params.smoothing;
  const double denom = static_cast<double>(c_atk.n) + 2.0 * s;

  // Smoothed log-probabilities of keyword (pairs); ln_hit = ln p, ln_miss =
  // ln(1-p).
  std::vector<double> ln_hit(m * m), ln_miss(m * m);
  for (std::size_t w = 0; w < m; ++w)
    for (std::size_t w2 = 0; w2 < m; ++w2) {
      const double p = (static_cast<double>(c_atk.at(w, w2)) + s) / denom;
      ln_hit[w * m + w2] = std::log(p);
      ln_miss[w * m + w2] = std::log(1.0 - p);
    }

  auto volume = [&](std::size_t a) {
    return std::min<std::int64_t>(view.qcooc_at(a, a),
                                  static_cast<std::int64_t>(view.n_ind));
  };
  auto joint_volume = [&](std::size_t a, std::size_t b) {
    return std::min<std::int64_t>(view.qcooc_at(a, b),
                                  static_cast<std::int64_t>(view.n_ind));
  };

  std::unordered_map<std::uint32_t, std::size_t> pos_of;
  for (std::size_t a = 0; a < l; ++a) pos_of.emplace(view.queries[a], a);

  std::vector<char> token_known(l, 0), kw_taken(m, 0);
  for (const KnownQuery& kq : view.known) {
    token_known[pos_of.at(kq.token)] = 1;
    kw_taken[kq.keyword] = 1;
  }
  std::vector<std::size_t> unknown;
  for (std::size_t a = 0; a < l; ++a)
    if (!token_known[a]) unknown.push_back(a);

  std::vector<std::uint32_t> candidates;  // keywords not taken by known pairs
  for (std::size_t w = 0; w < m; ++w)
    if (!kw_taken[w]) candidates.push_back(static_cast<std::uint32_t>(w));
  if (unknown.size() > candidates.size())
    throw InfeasibleError("not enough unused keywords for unknown queries");

  std::vector<std::uint32_t> current(l, 0);  // position -> keyword
  for (const KnownQuery& kq : view.known)
    current[pos_of.at(kq.token)] = kq.keyword;

  auto marginal_cost = [&](std::size_t a, std::uint32_t w) {
    const double vq = static_cast<double>(volume(a));
    return -(vq * ln_hit[w * m + w] + (n_ind - vq) * ln_miss[w * m + w]);
  };

  if (!unknown.empty()) {
    CostMatrix initial(unknown.size(), candidates.size());
    for (std::size_t r = 0; r < unknown.size(); ++r)
      for (std::size_t c = 0; c < candidates.size(); ++c)
        initial.at(r, c) = marginal_cost(unknown[r], candidates[c]);
    const Assignment assignment = solve_linear_assignment(initial);
    for (std::size_t r = 0; r < unknown.size(); ++r)
      current[unknown[r]] = candidates[assignment.col_of_row[r]];
  }

  const std::size_t want_free = static_cast<std::size_t>(
      std::ceil(params.p_free * static_cast<double>(l)));
  for (int iter = 0; iter < params.n_iters && !unknown.empty(); ++iter) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(iter) + 1));
    const std::size_t n_free = std::min(want_free, unknown.size());
    auto free_sel = rng.sample_without_replacement(unknown.size(), n_free);
    std::sort(free_sel.begin(), free_sel.end());

    std::vector<char> is_free(l, 0);
    std::vector<std::size_t> free_pos;
    free_pos.reserve(n_free);
    for (std::size_t idx : free_sel) {
      is_free[unknown[idx]] = 1;
      free_pos.push_back(unknown[idx]);
    }

    // Fixed side: known pairs plus non-free unknowns with their current
    // assignment. Their keywords leave the candidate pool.
    std::vector<std::size_t> fixed_pos;
    fixed_pos.reserve(l - n_free);
    std::vector<char> kw_used(m, 0);
    for (std::size_t a = 0; a < l; ++a) {
      if (is_free[a]) continue;
      fixed_pos.push_back(a);
      kw_used[current[a]] = 1;
    }
    std::vector<std::uint32_t> open_kw;
    for (std::uint32_t w : candidates)
      if (!kw_used[w]) open_kw.push_back(w);

    CostMatrix costs(free_pos.size(), open_kw.size());
    for (std::size_t r = 0; r < free_pos.size(); ++r) {
      const std::size_t a = free_pos[r];
      for (std::size_t c = 0; c < open_kw.size(); ++c) {
        const std::uint32_t w = open_kw[c];
        double total = marginal_cost(a, w);
        for (std::size_t b : fixed_pos) {
          const std::uint32_t w2 = current[b];
          const double joint = static_cast<double>(joint_volume(a, b));
          total -= joint * ln_hit[w * m + w2] +
                   (n_ind - joint) * ln_miss[w * m + w2];
        }
        costs.at(r, c) = total;
      }
    }
    const Assignment assignment = solve_linear_assignment(costs);
    for (std::size_t r = 0; r < free_pos.size(); ++r)
      current[free_pos[r]] = open_kw[assignment.col_of_row[r]];
  }

  Prediction pred;
  for (const KnownQuery& kq : view.known) {
    pred.known_tokens.push_back(kq.token);
    pred.certainty[kq.token] = kInf;
  }
  for (std::size_t a = 0; a < l; ++a) {
    pred.keyword_of[view.queries[a]] = current[a];
    if (!token_known[a]) pred.certainty[view.queries[a]] = 0.0;
  }
  return pred;
}

double accuracy(const Prediction& pred, const GroundTruth& truth,
                bool exclude_known) {
  if (pred.keyword_of.size() != truth.keyword_of.size())
    throw TokenSetMismatchError("prediction and truth cover different tokens");
  for (const auto& [token, kw] : pred.keyword_of)
    if (truth.keyword_of.find(token) == truth.keyword_of.end())
      throw TokenSetMismatchError("token " + std::to_string(token) +
                                  " missing from ground truth");

  std::unordered_map<std::uint32_t, char> excluded;
  if (exclude_known)
    for (std::uint32_t t : pred.known_tokens) excluded.emplace(t, 1);

  std::size_t scored = 0, correct = 0;
  for (const auto& [token, kw] : pred.keyword_of) {
    if (excluded.count(token)) continue;
    ++scored;
    if (truth.keyword_of.at(token) == kw) ++correct;
  }
  if (scored == 0) return 1.0;
  return static_cast<double>(correct) / static_cast<double>(scored);
}

}  // namespace leakstat
