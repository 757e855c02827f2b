#ifndef KEMENY_RANK_SCORE_HPP
#define KEMENY_RANK_SCORE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "kemeny/errors.hpp"
#include "kemeny/score_matrix.hpp"

namespace kemeny {

// Per-observation scores obtained by summing the centered score matrix down
// each column. Larger observations get larger scores, the vector sums to zero,
// and on tie-free data it is an affine image of the ordinary ranks.
struct RankScoreVector {
  std::vector<double> values;
  double mean = 0.0;
  double ss = 0.0;  // sum of squared deviations from the mean

  std::size_t size() const noexcept { return values.size(); }
};

// Rank-score vector rescaled to zero mean and unit sample variance.
struct StandardizedVector {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
};

namespace detail {

inline void finalize_moments(RankScoreVector& r) {
  const std::size_t n = r.values.size();
  double sum = 0.0;
  for (double v : r.values) sum += v;
  r.mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (double v : r.values) {
    const double d = v - r.mean;
    ss += d * d;
  }
  r.ss = ss;
}

}  // namespace detail

inline RankScoreVector rank_score_vector(const CenteredScoreMatrix& c) {
  const std::size_t n = c.size();
  if (n < 2) throw SizeError("rank scores need at least 2 observations");
  RankScoreVector r;
  r.values.assign(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) sum += c(j, k);
    r.values[k] = sum;
  }
  detail::finalize_moments(r);
  return r;
}

// Same vector in O(n log n) without forming the matrix. With a_k observations
// strictly above x[k] and T tied unordered pairs overall, the column sum
// collapses to (n - 1 - 2*a_k)/(n - 1) - 2*T/(n^2 - n).
inline RankScoreVector rank_score_vector_fast(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n < 2) throw SizeError("rank scores need at least 2 observations");
  for (double v : x) {
    if (std::isnan(v)) throw InvalidValueError("NaN observation is not comparable");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });

  RankScoreVector r;
  r.values.assign(n, 0.0);
  const double inv_pairs = 1.0 / static_cast<double>(n - 1);
  std::int64_t tied_pairs = 0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && !(x[order[i]] < x[order[j]])) ++j;
    const std::int64_t group = static_cast<std::int64_t>(j - i);
    tied_pairs += group * (group - 1) / 2;
    const std::int64_t above = static_cast<std::int64_t>(n - j);
    const double base =
        static_cast<double>(static_cast<std::int64_t>(n) - 1 - 2 * above) * inv_pairs;
    for (std::size_t k = i; k < j; ++k) r.values[order[k]] = base;
    i = j;
  }

  const double tie_shift = static_cast<double>(2 * tied_pairs) /
                           static_cast<double>(n * n - n);
  for (double& v : r.values) v -= tie_shift;
  detail::finalize_moments(r);
  return r;
}

inline StandardizedVector standardize(const RankScoreVector& r) {
  const std::size_t n = r.size();
  if (n < 2) throw SizeError("standardization needs at least 2 observations");
  if (!(r.ss > 0.0)) throw DegenerateInputError("constant rank scores cannot be standardized");
  const double scale = std::sqrt(static_cast<double>(n - 1) / r.ss);
  StandardizedVector z;
  z.values.reserve(n);
  for (double v : r.values) z.values.push_back((v - r.mean) * scale);
  return z;
}

}  // namespace kemeny

#endif  // KEMENY_RANK_SCORE_HPP
