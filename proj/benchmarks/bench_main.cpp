#include <benchmark/benchmark.h>

#include "leakstat/assignment.hpp"
#include "leakstat/attacks.hpp"
#include "leakstat/cooc.hpp"
#include "leakstat/leakage.hpp"
#include "leakstat/porter.hpp"
#include "leakstat/rng.hpp"
#include "leakstat/split.hpp"
#include "leakstat/stats.hpp"
#include "leakstat/synth.hpp"

using namespace leakstat;

namespace {

std::vector<double> linspace(double lo, double hi, std::size_t m) {
  std::vector<double> p(m);
  for (std::size_t i = 0; i < m; ++i)
    p[i] = lo + (hi - lo) * static_cast<double>(i) /
                    static_cast<double>(m - 1);
  return p;
}

const Corpus& bench_corpus() {
  static const Corpus corpus = sample_corpus(
      DocumentModel(BernoulliModel{linspace(0.05, 0.6, 200)}), 5000, 1);
  return corpus;
}

void BM_PorterStem(benchmark::State& state) {
  const char* words[] = {"generalizations", "oscillators",  "relational",
                         "hopefulness",     "troubleshoot", "controlling",
                         "effectiveness",   "rationalize"};
  for (auto _ : state)
    for (const char* w : words)
      benchmark::DoNotOptimize(porter_stem(w));
}
BENCHMARK(BM_PorterStem);

void BM_CooccurrenceMatrix(benchmark::State& state) {
  const Corpus& corpus = bench_corpus();
  for (auto _ : state)
    benchmark::DoNotOptimize(cooccurrence_matrix(corpus));
}
BENCHMARK(BM_CooccurrenceMatrix)->Unit(benchmark::kMillisecond);

void BM_SimilarityMetrics(benchmark::State& state) {
  const Corpus& corpus = bench_corpus();
  const SplitPair pair = split_uniform(corpus, 2500, 2500, 3);
  const CoocMatrix a = cooccurrence_matrix(pair.atk);
  const CoocMatrix b = cooccurrence_matrix(pair.ind);
  for (auto _ : state)
    benchmark::DoNotOptimize(similarity_metrics(b, a));
}
BENCHMARK(BM_SimilarityMetrics);

void BM_LinearAssignment(benchmark::State& state) {
  const std::size_t rows = static_cast<std::size_t>(state.range(0));
  Rng rng(7);
  CostMatrix costs(rows, rows * 2);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < rows * 2; ++c)
      costs.at(r, c) = rng.uniform();
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_linear_assignment(costs));
}
BENCHMARK(BM_LinearAssignment)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_IhopAttack(benchmark::State& state) {
  const Corpus& corpus = bench_corpus();
  const SplitPair pair = split_uniform(corpus, 2500, 2500, 5);
  const CoocMatrix c_atk = cooccurrence_matrix(pair.atk);
  const SimulatedIndex index = build_index(pair.ind, 6, 1);
  const auto [view, truth] = observe_queries(index, 200, 7);
  IhopParams params;
  params.n_iters = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(ihop_attack(view, c_atk, params, 8));
}
BENCHMARK(BM_IhopAttack)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_RefinedScoreAttack(benchmark::State& state) {
  const Corpus& corpus = bench_corpus();
  const SplitPair pair = split_uniform(corpus, 2500, 2500, 5);
  const CoocMatrix c_atk = cooccurrence_matrix(pair.atk);
  const SimulatedIndex index = build_index(pair.ind, 6, 1);
  auto [view, truth] = observe_queries(index, 200, 7);
  view = select_known_queries(view, truth, 10, 9);
  for (auto _ : state)
    benchmark::DoNotOptimize(refined_score_attack(view, c_atk, 10));
}
BENCHMARK(BM_RefinedScoreAttack)->Unit(benchmark::kMillisecond);

void BM_QuantileFit(benchmark::State& state) {
  Rng rng(11);
  std::vector<AccuracyPoint> points;
  for (int i = 0; i < 2000; ++i) {
    AccuracyPoint pt;
    pt.epsilon = 1.0;
    pt.n_ind = 50 + static_cast<std::int64_t>(rng.below(5000));
    pt.n_atk = 50 + static_cast<std::int64_t>(rng.below(5000));
    pt.accuracy = expit(-2.0 * size_regressor(pt.n_ind, pt.n_atk) - 4.0 +
                        rng.uniform() - 0.5);
    pt.scored_queries = 500;
    points.push_back(pt);
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(fit_quantile_bound(points, 0.95));
}
BENCHMARK(BM_QuantileFit)->Unit(benchmark::kMillisecond);

void BM_BonferroniShiftTest(benchmark::State& state) {
  const Corpus& corpus = bench_corpus();
  const SplitPair pair = split_uniform(corpus, 2500, 2500, 13);
  const CoocMatrix a = cooccurrence_matrix(pair.atk);
  const CoocMatrix b = cooccurrence_matrix(pair.ind);
  for (auto _ : state)
    benchmark::DoNotOptimize(bonferroni_coprob_test(b, a));
}
BENCHMARK(BM_BonferroniShiftTest)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
