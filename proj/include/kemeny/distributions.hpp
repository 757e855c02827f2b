#ifndef KEMENY_DISTRIBUTIONS_HPP
#define KEMENY_DISTRIBUTIONS_HPP

#include <cmath>
#include <limits>

#include "kemeny/errors.hpp"

namespace kemeny {

namespace detail {

// Continued-fraction core for the regularized incomplete beta, evaluated with
// the modified Lentz algorithm. Converges in roughly sqrt(max(a,b)) steps for
// x below the crossover point.
inline double incomplete_beta_cf(double a, double b, double x) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 3e-16;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 500; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace detail

// Regularized incomplete beta I_x(a, b) for a, b > 0 and x in [0, 1].
inline double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) throw InvalidValueError("beta parameters must be positive");
  if (std::isnan(x) || x < 0.0 || x > 1.0) {
    throw InvalidValueError("incomplete beta argument outside [0, 1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * detail::incomplete_beta_cf(a, b, x) / a;
  }
  return 1.0 - front * detail::incomplete_beta_cf(b, a, 1.0 - x) / b;
}

// CDF of Student's t with df degrees of freedom. The tail is computed through
// the incomplete beta in its fast-converging region, so small probabilities
// come out without cancellation and F(-t) + F(t) = 1 holds exactly.
inline double student_t_cdf(double t, int df) {
  if (df < 1) throw InvalidValueError("degrees of freedom must be at least 1");
  if (std::isnan(t)) throw InvalidValueError("t statistic is NaN");
  if (std::isinf(t)) return t > 0.0 ? 1.0 : 0.0;
  const double v = static_cast<double>(df);
  const double x = v / (v + t * t);
  const double tail = 0.5 * regularized_incomplete_beta(0.5 * v, 0.5, x);
  return t >= 0.0 ? 1.0 - tail : tail;
}

inline double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

// Inverse t CDF by bracketed bisection; the result q satisfies
// |student_t_cdf(q, df) - p| <= 1e-10.
inline double student_t_quantile(double p, int df) {
  if (df < 1) throw InvalidValueError("degrees of freedom must be at least 1");
  if (!(p > 0.0) || !(p < 1.0)) throw InvalidValueError("quantile level outside (0, 1)");
  if (p == 0.5) return 0.0;
  const bool flip = p < 0.5;
  const double target = flip ? 1.0 - p : p;

  double lo = 0.0;
  double hi = 1.0;
  while (student_t_cdf(hi, df) < target) {
    hi *= 2.0;
    if (hi > 1e300) break;
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (student_t_cdf(mid, df) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 1e-15 * std::max(1.0, lo)) break;
  }
  const double q = 0.5 * (lo + hi);
  return flip ? -q : q;
}

// Survival function of the Kolmogorov distribution: the alternating series
// 2 * sum_{j>=1} (-1)^{j-1} exp(-2 j^2 lambda^2), truncated once terms drop
// below 1e-12. For lambda below the series' practical range the value is 1 to
// well past double precision.
inline double kolmogorov_sf(double lambda) {
  if (std::isnan(lambda)) throw InvalidValueError("lambda is NaN");
  if (lambda < 0.004) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 2000; ++j) {
    const double term = std::exp(-2.0 * static_cast<double>(j) * j * lambda * lambda);
    sum += sign * term;
    if (term < 1e-12) break;
    sign = -sign;
  }
  const double p = 2.0 * sum;
  return p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p);
}

}  // namespace kemeny

#endif  // KEMENY_DISTRIBUTIONS_HPP
