#ifndef KEMENY_INFERENCE_HPP
#define KEMENY_INFERENCE_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "kemeny/distributions.hpp"
#include "kemeny/errors.hpp"
#include "kemeny/estimators.hpp"

namespace kemeny {

// Studentized correlation: rho * sqrt(n - 2) / sqrt(1 - rho^2). Exactly +/-1
// maps to signed infinity (perfect correlation); anything beyond is an error.
inline double t_statistic(double rho, std::size_t n) {
  if (n < 3) throw SizeError("studentization needs at least 3 observations");
  if (std::isnan(rho) || std::fabs(rho) > 1.0) {
    throw InvalidValueError("correlation must lie in [-1, 1]");
  }
  if (rho == 1.0) return std::numeric_limits<double>::infinity();
  if (rho == -1.0) return -std::numeric_limits<double>::infinity();
  return rho * std::sqrt(static_cast<double>(n - 2)) /
         std::sqrt((1.0 - rho) * (1.0 + rho));
}

struct TestResult {
  double statistic = 0.0;
  int df = 0;
  double p_t = 1.0;
  double p_normal = 1.0;
  double alpha = 0.05;
  bool reject_t = false;
  bool reject_normal = false;
  bool perfect_correlation = false;
};

// Two-sided test of independence given an already-computed correlation.
inline TestResult make_test_result(double rho, std::size_t n, double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) throw InvalidValueError("alpha outside (0, 1)");
  TestResult r;
  r.statistic = t_statistic(rho, n);
  r.df = static_cast<int>(n) - 2;
  r.alpha = alpha;
  r.perfect_correlation = std::isinf(r.statistic);
  if (r.perfect_correlation) {
    r.p_t = 0.0;
    r.p_normal = 0.0;
  } else {
    r.p_t = 2.0 * student_t_cdf(-std::fabs(r.statistic), r.df);
    r.p_normal = 2.0 * normal_cdf(-std::fabs(r.statistic));
  }
  r.reject_t = r.p_t < alpha;
  r.reject_normal = r.p_normal < alpha;
  return r;
}

inline TestResult test_independence(std::span<const double> x, std::span<const double> y,
                                    double alpha = 0.05) {
  const CorrelationEstimate est = rho_kappa(x, y);
  return make_test_result(est.value, est.n, alpha);
}

struct KsResult {
  double d = 0.0;  // sup-norm distance between empirical and reference CDF
  double p = 1.0;  // asymptotic Kolmogorov p-value
  std::size_t n = 0;
};

// One-sample Kolmogorov-Smirnov statistic against an arbitrary continuous
// reference CDF, with the asymptotic p-value K(sqrt(m) * D).
template <typename Cdf>
KsResult ks_one_sample(std::span<const double> sample, Cdf&& cdf) {
  const std::size_t m = sample.size();
  if (m < 10) throw SizeError("KS test needs at least 10 observations");
  std::vector<double> sorted(sample.begin(), sample.end());
  for (double v : sorted) {
    if (std::isnan(v)) throw InvalidValueError("NaN observation in KS sample");
  }
  std::sort(sorted.begin(), sorted.end());
  const double inv_m = 1.0 / static_cast<double>(m);
  double d = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double f = cdf(sorted[i]);
    const double upper = static_cast<double>(i + 1) * inv_m - f;
    const double lower = f - static_cast<double>(i) * inv_m;
    d = std::max(d, std::max(upper, lower));
  }
  KsResult r;
  r.d = d;
  r.n = m;
  r.p = kolmogorov_sf(std::sqrt(static_cast<double>(m)) * d);
  return r;
}

}  // namespace kemeny

#endif  // KEMENY_INFERENCE_HPP
