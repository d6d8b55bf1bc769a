#include "leakstat/stats.hpp"

#include <algorithm>
#include <cmath>

#include "leakstat/rng.hpp"

namespace leakstat {
namespace {

constexpr double kSqrt2 = 1.4142135623730951;

struct Design {
  std::vector<double> x;
  std::vector<double> y;
};

struct OlsResult {
  double a, b, se_a, se_b, r2;
};

OlsResult ols(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0)
    throw DegenerateDesignError("all regressor values are identical");

  OlsResult fit{};
  fit.b = sxy / sxx;
  fit.a = mean_y - fit.b * mean_x;

  double ssr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - fit.a - fit.b * x[i];
    ssr += r * r;
  }
  const double sigma2 =
      n > 2 ? ssr / static_cast<double>(n - 2) : 0.0;
  fit.se_b = std::sqrt(sigma2 / sxx);
  fit.se_a = std::sqrt(sigma2 * (1.0 / static_cast<double>(n) +
                                 mean_x * mean_x / sxx));
  fit.r2 = syy > 0.0 ? 1.0 - ssr / syy : 1.0;
  return fit;
}

double two_sided_p(double z) {
  return std::erfc(std::fabs(z) / kSqrt2);
}

}  // namespace

double logit(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw DomainError("logit requires p in (0,1), got " + std::to_string(p));
  return std::log(p / (1.0 - p));
}

double expit(double x) {
  if (x >= 0.0) {
    const double e = std::exp(-x);
    return 1.0 / (1.0 + e);
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double clamp_accuracy(double accuracy, std::int64_t scored_queries) {
  const double lo = scored_queries > 0
                        ? 1.0 / (2.0 * static_cast<double>(scored_queries))
                        : 1e-9;
  return std::clamp(accuracy, lo, 1.0 - lo);
}

double size_regressor(std::int64_t n_ind, std::int64_t n_atk) {
  if (n_ind < 1 || n_atk < 1)
    throw DomainError("size regressor needs n_ind, n_atk >= 1");
  return 0.5 * std::log(1.0 / static_cast<double>(n_ind) +
                        1.0 / static_cast<double>(n_atk));
}

double pinball_loss(std::span<const double> x, std::span<const double> y,
                    double a, double b, double alpha) {
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double u = y[i] - (b * x[i] + a);
    total += u * (alpha - (u < 0.0 ? 1.0 : 0.0));
  }
  return total;
}

LinearFit fit_accuracy_function(std::span<const AccuracyPoint> points) {
  Design d;
  for (const AccuracyPoint& pt : points) {
    if (pt.epsilon <= 0.0) continue;  // degenerate identical-dataset runs
    d.x.push_back(std::log(pt.epsilon));
    d.y.push_back(logit(clamp_accuracy(pt.accuracy, pt.scored_queries)));
  }
  if (d.x.size() < 3)
    throw InsufficientDataError("accuracy regression needs >= 3 usable points");

  const OlsResult fit = ols(d.x, d.y);
  LinearFit out;
  out.a = fit.a;
  out.b = fit.b;
  out.se_a = fit.se_a;
  out.se_b = fit.se_b;
  out.r2 = fit.r2;
  out.n_points = d.x.size();
  return out;
}

double f_acc(const LinearFit& fit, double epsilon) {
  if (epsilon <= 0.0) throw DomainError("f_acc requires epsilon > 0");
  return expit(fit.b * std::log(epsilon) + fit.a);
}

FitComparison compare_fits(const LinearFit& f1, const LinearFit& f2) {
  // Sub-epsilon standard errors (noiseless fits) would turn rounding noise
  // into huge z statistics; floor them at machine scale.
  constexpr double kSeFloor = 1e-12;
  FitComparison cmp;
  const double se_b = std::max(
      std::sqrt(f1.se_b * f1.se_b + f2.se_b * f2.se_b), kSeFloor);
  const double se_a = std::max(
      std::sqrt(f1.se_a * f1.se_a + f2.se_a * f2.se_a), kSeFloor);
  cmp.z_slope = (f1.b - f2.b) / se_b;
  cmp.z_intercept = (f1.a - f2.a) / se_a;
  cmp.p_slope = two_sided_p(cmp.z_slope);
  cmp.p_intercept = two_sided_p(cmp.z_intercept);
  return cmp;
}

QuantileFit fit_quantile_bound(std::span<const AccuracyPoint> points,
                               double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("quantile level alpha must lie in (0,1)");
  if (points.size() < 10)
    throw InsufficientDataError("quantile regression needs >= 10 points");

  Design d;
  d.x.reserve(points.size());
  d.y.reserve(points.size());
  for (const AccuracyPoint& pt : points) {
    d.x.push_back(size_regressor(pt.n_ind, pt.n_atk));
    d.y.push_back(logit(clamp_accuracy(pt.accuracy, pt.scored_queries)));
  }

  // Start at the OLS line, then IRLS with geometrically decayed smoothing.
  const OlsResult start = ols(d.x, d.y);
  double a = start.a, b = start.b;
  double delta = 1.0;
  const std::size_t n = d.x.size();
  for (int iter = 0; iter < 10000; ++iter) {
    double sw = 0.0, swx = 0.0, swy = 0.0, swxx = 0.0, swxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = d.y[i] - a - b * d.x[i];
      const double grad = r >= 0.0 ? alpha : 1.0 - alpha;
      const double w = grad / std::max(std::fabs(r), delta);
      sw += w;
      swx += w * d.x[i];
      swy += w * d.y[i];
      swxx += w * d.x[i] * d.x[i];
      swxy += w * d.x[i] * d.y[i];
    }
    const double denom = sw * swxx - swx * swx;
    if (denom == 0.0)
      throw DegenerateDesignError("quantile design is degenerate");
    const double b_next = (sw * swxy - swx * swy) / denom;
    const double a_next = (swy - b_next * swx) / sw;
    const double change =
        std::max(std::fabs(a_next - a), std::fabs(b_next - b));
    a = a_next;
    b = b_next;
    if (change < 1e-8 && delta <= 1e-10) break;
    delta = std::max(delta * 0.9, 1e-12);
  }

  // Exact intercept step: for fixed slope the optimal intercept is the
  // alpha-quantile of the residuals y - b*x.
  std::vector<double> resid(n);
  for (std::size_t i = 0; i < n; ++i) resid[i] = d.y[i] - b * d.x[i];
  std::sort(resid.begin(), resid.end());
  double a_exact = resid[std::min<std::size_t>(
      n - 1, static_cast<std::size_t>(
                 std::ceil(alpha * static_cast<double>(n)) - 1))];
  if (pinball_loss(d.x, d.y, a_exact, b, alpha) <
      pinball_loss(d.x, d.y, a, b, alpha))
    a = a_exact;

  QuantileFit fit;
  fit.a = a;
  fit.b = b;
  fit.alpha = alpha;
  fit.pinball_loss = pinball_loss(d.x, d.y, a, b, alpha);
  return fit;
}

double f_max_acc(const QuantileFit& fit, std::int64_t n_ind,
                 std::optional<std::int64_t> n_atk_bound) {
  if (n_ind < 1) return 0.0;  // an empty index leaks nothing
  const double inv_atk =
      n_atk_bound ? 1.0 / static_cast<double>(*n_atk_bound) : 0.0;
  const double x =
      0.5 * std::log(1.0 / static_cast<double>(n_ind) + inv_atk);
  return expit(fit.b * x + fit.a);
}

std::int64_t max_index_size(const QuantileFit& fit, double beta_max,
                            std::optional<std::int64_t> n_atk_bound) {
  if (!(beta_max > 0.0 && beta_max < 1.0))
    throw DomainError("beta_max must lie in (0,1)");
  if (fit.b >= 0.0)
    throw SlopeSignError(
        "max index size needs a negative slope (accuracy must decrease as "
        "datasets shrink apart)");

  const double inv_atk =
      n_atk_bound ? 1.0 / static_cast<double>(*n_atk_bound) : 0.0;
  const double x_star = (logit(beta_max) - fit.a) / fit.b;
  const double rhs = std::exp(2.0 * x_star) - inv_atk;
  if (rhs <= 0.0)
    throw NoFiniteBoundError(
        "the accuracy bound never reaches beta_max for any index size");

  constexpr double kTiny = 1e-18;
  std::int64_t n =
      static_cast<std::int64_t>(std::floor(1.0 / std::max(rhs, kTiny)));

  // Direct evaluation pins the bracketing exactly.
  int guard = 0;
  while (n > 0 && f_max_acc(fit, n, n_atk_bound) > beta_max) {
    --n;
    if (++guard > 1000) throw DomainError("max_index_size failed to bracket");
  }
  guard = 0;
  while (f_max_acc(fit, n + 1, n_atk_bound) <= beta_max) {
    ++n;
    if (++guard > 1000) throw DomainError("max_index_size failed to bracket");
  }
  return n;
}

ZTestResult two_proportion_ztest(std::int64_t x1, std::int64_t n1,
                                 std::int64_t x2, std::int64_t n2) {
  if (n1 < 1 || n2 < 1 || x1 < 0 || x2 < 0 || x1 > n1 || x2 > n2)
    throw InvalidCountsError("two_proportion_ztest needs 0 <= x <= n, n >= 1");
  const double pooled = static_cast<double>(x1 + x2) /
                        static_cast<double>(n1 + n2);
  if (pooled <= 0.0 || pooled >= 1.0) return {0.0, 1.0};
  const double se = std::sqrt(pooled * (1.0 - pooled) *
                              (1.0 / static_cast<double>(n1) +
                               1.0 / static_cast<double>(n2)));
  const double z = (static_cast<double>(x1) / static_cast<double>(n1) -
                    static_cast<double>(x2) / static_cast<double>(n2)) /
                   se;
  return {z, two_sided_p(z)};
}

ShiftTestReport bonferroni_coprob_test(const CoocMatrix& c_ind,
                                       const CoocMatrix& c_atk) {
  if (c_ind.m != c_atk.m)
    throw DimensionMismatchError("co-occurrence matrices have different m");
  if (c_ind.n < 1 || c_atk.n < 1)
    throw EmptyDatasetError("shift test needs non-empty datasets");

  ShiftTestReport report;
  report.m = c_ind.m;
  const std::size_t m = c_ind.m;
  report.pvalues.reserve(m * (m + 1) / 2);
  report.min_pvalue = 1.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      const double pv =
          two_proportion_ztest(c_ind.at(i, j), c_ind.n, c_atk.at(i, j),
                               c_atk.n)
              .p;
      report.pvalues.push_back(pv);
      report.min_pvalue = std::min(report.min_pvalue, pv);
    }
  const double pairs = static_cast<double>(m) * static_cast<double>(m + 1) / 2.0;
  report.corrected = pairs * report.min_pvalue;
  for (double threshold : {0.05, 0.01, 0.001})
    report.reject_at.emplace_back(threshold, report.corrected < threshold);
  return report;
}

DominanceResult dominance_experiment(const BernoulliModel& model_ind,
                                     const BernoulliModel& model_atk,
                                     std::size_t n_ind, std::size_t n_atk,
                                     std::size_t reps, std::uint64_t seed) {
  if (model_ind.m() != model_atk.m())
    throw DimensionMismatchError("dominance models have different widths");
  if (reps < 1) throw DomainError("dominance experiment needs reps >= 1");

  DominanceResult result;
  result.eps_equal.reserve(reps);
  result.eps_unequal.reserve(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    const auto ind_eq = sample_cooccurrence(
        DocumentModel(model_ind), n_ind, derive_seed(seed, 4 * r));
    const auto atk_eq = sample_cooccurrence(
        DocumentModel(model_ind), n_atk, derive_seed(seed, 4 * r + 1));
    result.eps_equal.push_back(similarity_metrics(ind_eq, atk_eq).first);

    const auto ind_ne = sample_cooccurrence(
        DocumentModel(model_ind), n_ind, derive_seed(seed, 4 * r + 2));
    const auto atk_ne = sample_cooccurrence(
        DocumentModel(model_atk), n_atk, derive_seed(seed, 4 * r + 3));
    result.eps_unequal.push_back(similarity_metrics(ind_ne, atk_ne).first);
  }

  for (double e : result.eps_equal) result.mean_equal += e;
  for (double e : result.eps_unequal) result.mean_unequal += e;
  result.mean_equal /= static_cast<double>(reps);
  result.mean_unequal /= static_cast<double>(reps);

  // sup over pooled sample points of F_unequal - F_equal; dominance of the
  // equal case predicts this stays at (or dips below) zero.
  std::vector<double> eq = result.eps_equal;
  std::vector<double> ne = result.eps_unequal;
  std::sort(eq.begin(), eq.end());
  std::sort(ne.begin(), ne.end());
  std::size_t ie = 0, in = 0;
  double violation = 0.0;
  const double ne_n = static_cast<double>(ne.size());
  const double eq_n = static_cast<double>(eq.size());
  while (ie < eq.size() || in < ne.size()) {
    const double x = (ie < eq.size() && (in >= ne.size() || eq[ie] <= ne[in]))
                         ? eq[ie]
                         : ne[in];
    while (ie < eq.size() && eq[ie] <= x) ++ie;
    while (in < ne.size() && ne[in] <= x) ++in;
    violation = std::max(violation, static_cast<double>(in) / ne_n -
                                        static_cast<double>(ie) / eq_n);
  }
  result.violation = violation;
  return result;
}

}  // namespace leakstat
