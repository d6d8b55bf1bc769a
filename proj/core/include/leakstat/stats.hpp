#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "leakstat/cooc.hpp"
#include "leakstat/synth.hpp"

namespace leakstat {

// log(p / (1-p)); DomainError outside (0,1).
double logit(double p);
// Inverse of logit.
double expit(double x);
// Standard normal CDF via the complementary error function.
double normal_cdf(double x);

// One attack simulation outcome used as a regression sample.
struct AccuracyPoint {
  double epsilon = 0.0;
  std::int64_t n_ind = 0;
  std::int64_t n_atk = 0;
  double accuracy = 0.0;
  std::string attack;
  std::uint64_t seed = 0;
  // Number of scored queries; bounds the logit clamp at [1/(2l), 1 - 1/(2l)].
  std::int64_t scored_queries = 0;
};

struct LinearFit {
  double a = 0.0;  // intercept
  double b = 0.0;  // slope
  double se_a = 0.0;
  double se_b = 0.0;
  double r2 = 0.0;
  std::size_t n_points = 0;
};

struct QuantileFit {
  double a = 0.0;
  double b = 0.0;
  double alpha = 0.5;
  double pinball_loss = 0.0;
};

struct FitComparison {
  double z_slope = 0.0;
  double p_slope = 1.0;
  double z_intercept = 0.0;
  double p_intercept = 1.0;
};

struct ZTestResult {
  double z = 0.0;
  double p = 1.0;
};

struct ShiftTestReport {
  std::size_t m = 0;
  // p-values for unordered pairs (i <= j), row-major upper triangle.
  std::vector<double> pvalues;
  double min_pvalue = 1.0;
  double corrected = 1.0;  // (m(m+1)/2) * min pvalue, uncapped
  std::vector<std::pair<double, bool>> reject_at;  // threshold -> rejected
};

struct DominanceResult {
  std::vector<double> eps_equal;
  std::vector<double> eps_unequal;
  double violation = 0.0;  // sup_x [F_unequal(x) - F_equal(x)]
  double mean_equal = 0.0;
  double mean_unequal = 0.0;
};

// Clamp used before logit; scored_queries <= 0 falls back to a 1e-9 guard.
double clamp_accuracy(double accuracy, std::int64_t scored_queries);

// The size regressor log(sqrt(1/n_ind + 1/n_atk)).
double size_regressor(std::int64_t n_ind, std::int64_t n_atk);

// Pinball (quantile) loss of the line y = b*x + a at level alpha.
double pinball_loss(std::span<const double> x, std::span<const double> y,
                    double a, double b, double alpha);

// OLS of logit(accuracy) on log(epsilon). Points with epsilon = 0 are
// excluded; accuracies are clamped per point.
LinearFit fit_accuracy_function(std::span<const AccuracyPoint> points);

// Average accuracy as a function of epsilon implied by a fit.
double f_acc(const LinearFit& fit, double epsilon);

// Two-sided normal tests on the slope and intercept differences.
FitComparison compare_fits(const LinearFit& f1, const LinearFit& f2);

// Quantile regression of logit(accuracy) on log(sqrt(1/n_ind + 1/n_atk)),
// solved by iteratively reweighted least squares with a geometrically
// decayed smoothing parameter.
QuantileFit fit_quantile_bound(std::span<const AccuracyPoint> points,
                               double alpha);

// Accuracy upper bound implied by a quantile fit; n_atk_bound = nullopt
// means an infinite-sized attacker dataset.
double f_max_acc(const QuantileFit& fit, std::int64_t n_ind,
                 std::optional<std::int64_t> n_atk_bound);

// Largest index size n with f_max_acc(n, n_atk_bound) <= beta_max; the
// result is adjusted by direct evaluation so that
// f_max_acc(n_max) <= beta_max < f_max_acc(n_max + 1).
std::int64_t max_index_size(const QuantileFit& fit, double beta_max,
                            std::optional<std::int64_t> n_atk_bound);

// Pooled two-proportion Z-test; p = 1 when the pooled proportion is 0 or 1.
ZTestResult two_proportion_ztest(std::int64_t x1, std::int64_t n1,
                                 std::int64_t x2, std::int64_t n2);

// Z-tests every unordered keyword pair and Bonferroni-combines the p-values.
ShiftTestReport bonferroni_coprob_test(const CoocMatrix& c_ind,
                                       const CoocMatrix& c_atk);

// Draws `reps` epsilon samples under (model_ind, model_ind) and under
// (model_ind, model_atk) and measures violations of the expected CDF
// ordering (the equal-co-probability case should dominate).
DominanceResult dominance_experiment(const BernoulliModel& model_ind,
                                     const BernoulliModel& model_atk,
                                     std::size_t n_ind, std::size_t n_atk,
                                     std::size_t reps, std::uint64_t seed);

}  // namespace leakstat
