#ifndef KEMENY_ESTIMATORS_HPP
#define KEMENY_ESTIMATORS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "kemeny/errors.hpp"
#include "kemeny/rank_score.hpp"
#include "kemeny/score_matrix.hpp"

namespace kemeny {

enum class Method {
  kemeny,
  spearman,
  kendall_a,
  kendall_b,
  pearson,
  ustat_pairwise,
  ustat_rowsum,
};

inline const char* to_string(Method m) {
  switch (m) {
    case Method::kemeny: return "kemeny";
    case Method::spearman: return "spearman";
    case Method::kendall_a: return "kendall_a";
    case Method::kendall_b: return "kendall_b";
    case Method::pearson: return "pearson";
    case Method::ustat_pairwise: return "ustat_pairwise";
    case Method::ustat_rowsum: return "ustat_rowsum";
  }
  return "unknown";
}

struct CorrelationEstimate {
  Method method = Method::kemeny;
  double value = 0.0;
  std::size_t n = 0;
  bool in_range = true;  // |value| <= 1; U-statistic forms may fall outside
};

namespace detail {

inline void require_paired(std::span<const double> x, std::span<const double> y,
                           std::size_t min_n) {
  if (x.size() != y.size()) throw SizeError("paired samples differ in length");
  if (x.size() < min_n) {
    throw SizeError("need at least " + std::to_string(min_n) + " observations");
  }
}

inline void require_comparable(std::span<const double> x) {
  for (double v : x) {
    if (std::isnan(v)) throw InvalidValueError("NaN observation is not comparable");
  }
}

inline bool all_tied(std::span<const double> x) {
  for (double v : x) {
    if (v != x[0]) return false;
  }
  return true;
}

// Centered inner product and sums of squares for two equal-length vectors.
struct CosineParts {
  double dot = 0.0;
  double ss_x = 0.0;
  double ss_y = 0.0;
};

inline CosineParts centered_cosine_parts(std::span<const double> x,
                                         std::span<const double> y) {
  const std::size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  CosineParts p;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    p.dot += dx * dy;
    p.ss_x += dx * dx;
    p.ss_y += dy * dy;
  }
  return p;
}

inline double clamped_cosine(const CosineParts& p) {
  double v = p.dot / std::sqrt(p.ss_x * p.ss_y);
  return std::clamp(v, -1.0, 1.0);
}

// Average ranks (1-based, ties share the mean of their positions).
inline std::vector<double> average_ranks(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && !(x[order[i]] < x[order[j]])) ++j;
    const double shared = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = shared;
    i = j;
  }
  return ranks;
}

}  // namespace detail

// Cosine of the centered rank-score embeddings, clamped to [-1, 1]. Reduces to
// Spearman's coefficient exactly on tie-free data and stays rank-based under
// ties.
inline CorrelationEstimate rho_kappa(std::span<const double> x, std::span<const double> y) {
  detail::require_paired(x, y, 3);
  const RankScoreVector u = rank_score_vector_fast(x);
  const RankScoreVector v = rank_score_vector_fast(y);
  if (!(u.ss > 0.0) || !(v.ss > 0.0)) {
    throw DegenerateInputError("all observations tied in one sample");
  }
  const detail::CosineParts p = detail::centered_cosine_parts(u.values, v.values);
  return {Method::kemeny, detail::clamped_cosine(p), x.size(), true};
}

inline CorrelationEstimate spearman_rho(std::span<const double> x, std::span<const double> y) {
  detail::require_paired(x, y, 3);
  detail::require_comparable(x);
  detail::require_comparable(y);
  if (detail::all_tied(x) || detail::all_tied(y)) {
    throw DegenerateInputError("all observations tied in one sample");
  }
  const std::vector<double> rx = detail::average_ranks(x);
  const std::vector<double> ry = detail::average_ranks(y);
  const detail::CosineParts p = detail::centered_cosine_parts(rx, ry);
  return {Method::spearman, detail::clamped_cosine(p), x.size(), true};
}

// (concordant - discordant) / (n choose 2); ties count toward neither.
inline CorrelationEstimate kendall_tau_a(std::span<const double> x, std::span<const double> y) {
  detail::require_paired(x, y, 2);
  detail::require_comparable(x);
  detail::require_comparable(y);
  if (detail::all_tied(x) || detail::all_tied(y)) {
    throw DegenerateInputError("all observations tied in one sample");
  }
  const std::size_t n = x.size();
  std::int64_t net = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int sx = (x[i] < x[j]) ? -1 : (x[j] < x[i]) ? 1 : 0;
      const int sy = (y[i] < y[j]) ? -1 : (y[j] < y[i]) ? 1 : 0;
      net += sx * sy;
    }
  }
  const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  return {Method::kendall_a, static_cast<double>(net) / pairs, n, true};
}

// Tie-corrected Kendall coefficient.
inline CorrelationEstimate kendall_tau_b(std::span<const double> x, std::span<const double> y) {
  detail::require_paired(x, y, 2);
  detail::require_comparable(x);
  detail::require_comparable(y);
  const std::size_t n = x.size();
  std::int64_t net = 0;
  std::int64_t tied_x = 0;
  std::int64_t tied_y = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool ex = !(x[i] < x[j]) && !(x[j] < x[i]);
      const bool ey = !(y[i] < y[j]) && !(y[j] < y[i]);
      if (ex) ++tied_x;
      if (ey) ++tied_y;
      if (ex || ey) continue;
      const bool concordant = (x[i] < x[j]) == (y[i] < y[j]);
      net += concordant ? 1 : -1;
    }
  }
  const std::int64_t pairs =
      static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n - 1) / 2;
  const double denom = std::sqrt(static_cast<double>(pairs - tied_x) *
                                 static_cast<double>(pairs - tied_y));
  if (!(denom > 0.0)) {
    throw DegenerateInputError("every pair tied in one sample");
  }
  return {Method::kendall_b, static_cast<double>(net) / denom, n, true};
}

inline CorrelationEstimate pearson_r(std::span<const double> x, std::span<const double> y) {
  detail::require_paired(x, y, 2);
  for (double v : x) {
    if (!std::isfinite(v)) throw InvalidValueError("pearson_r needs finite observations");
  }
  for (double v : y) {
    if (!std::isfinite(v)) throw InvalidValueError("pearson_r needs finite observations");
  }
  const detail::CosineParts p = detail::centered_cosine_parts(x, y);
  if (!(p.ss_x > 0.0) || !(p.ss_y > 0.0)) {
    throw DegenerateInputError("zero variance in one sample");
  }
  return {Method::pearson, detail::clamped_cosine(p), x.size(), true};
}

// Brute-force U-statistic over all ordered pairs of the centered score
// matrices: sum of elementwise products divided by n^2 - n. Diagnostic form;
// may land slightly outside [-1, 1].
inline CorrelationEstimate ustat_pairwise(std::span<const double> x, std::span<const double> y) {
  detail::require_paired(x, y, 3);
  if (detail::all_tied(x) || detail::all_tied(y)) {
    throw DegenerateInputError("all observations tied in one sample");
  }
  const CenteredScoreMatrix cx = center_score_matrix(build_score_matrix(x));
  const CenteredScoreMatrix cy = center_score_matrix(build_score_matrix(y));
  const std::size_t n = x.size();
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (k == l) continue;
      total += cx(k, l) * cy(k, l);
    }
  }
  const double value = total / static_cast<double>(n * n - n);
  CorrelationEstimate e{Method::ustat_pairwise, value, n, true};
  e.in_range = std::fabs(value) <= 1.0 + 1e-12;
  return e;
}

// Companion diagnostic: mean product of the rank-score vectors, computed from
// the explicit matrix route.
inline CorrelationEstimate ustat_rowsum(std::span<const double> x, std::span<const double> y) {
  detail::require_paired(x, y, 3);
  if (detail::all_tied(x) || detail::all_tied(y)) {
    throw DegenerateInputError("all observations tied in one sample");
  }
  const RankScoreVector u = rank_score_vector(center_score_matrix(build_score_matrix(x)));
  const RankScoreVector v = rank_score_vector(center_score_matrix(build_score_matrix(y)));
  const std::size_t n = x.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += u.values[i] * v.values[i];
  const double value = total / static_cast<double>(n);
  CorrelationEstimate e{Method::ustat_rowsum, value, n, true};
  e.in_range = std::fabs(value) <= 1.0 + 1e-12;
  return e;
}

inline CorrelationEstimate estimate(Method m, std::span<const double> x,
                                    std::span<const double> y) {
  switch (m) {
    case Method::kemeny: return rho_kappa(x, y);
    case Method::spearman: return spearman_rho(x, y);
    case Method::kendall_a: return kendall_tau_a(x, y);
    case Method::kendall_b: return kendall_tau_b(x, y);
    case Method::pearson: return pearson_r(x, y);
    case Method::ustat_pairwise: return ustat_pairwise(x, y);
    case Method::ustat_rowsum: return ustat_rowsum(x, y);
  }
  throw InvalidValueError("unknown method");
}

}  // namespace kemeny

#endif  // KEMENY_ESTIMATORS_HPP
