#ifndef KEMENY_SCORE_MATRIX_HPP
#define KEMENY_SCORE_MATRIX_HPP

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "kemeny/errors.hpp"

namespace kemeny {

// Pairwise order scores for one sample: entry (k,l) is +1 when x[k] >= x[l]
// and -1 when x[k] < x[l], with zeros on the diagonal. Ties score +1 in both
// directions, so off-diagonal entries are always +/-1 and the matrix is
// skew-symmetric exactly when the sample is tie-free.
class ScoreMatrix {
 public:
  explicit ScoreMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }

  std::int8_t operator()(std::size_t k, std::size_t l) const {
    return entries_[k * n_ + l];
  }
  std::int8_t& operator()(std::size_t k, std::size_t l) {
    return entries_[k * n_ + l];
  }

 private:
  std::size_t n_;
  std::vector<std::int8_t> entries_;
};

// Doubly centered score matrix; entries are real and the diagonal is zero.
class CenteredScoreMatrix {
 public:
  explicit CenteredScoreMatrix(std::size_t n) : n_(n), entries_(n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }

  double operator()(std::size_t k, std::size_t l) const {
    return entries_[k * n_ + l];
  }
  double& operator()(std::size_t k, std::size_t l) {
    return entries_[k * n_ + l];
  }

 private:
  std::size_t n_;
  std::vector<double> entries_;
};

inline ScoreMatrix build_score_matrix(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n < 2) throw SizeError("score matrix needs at least 2 observations");
  for (double v : x) {
    if (std::isnan(v)) throw InvalidValueError("NaN observation is not comparable");
  }
  ScoreMatrix m(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (k == l) continue;
      m(k, l) = x[k] >= x[l] ? std::int8_t{1} : std::int8_t{-1};
    }
  }
  return m;
}

// Removes row and column effects: subtracts column and row means taken over
// the n-1 off-diagonal entries, adds back the grand mean over all n^2 - n of
// them, then re-zeroes the diagonal.
inline CenteredScoreMatrix center_score_matrix(const ScoreMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::int64_t> row_sums(n, 0);
  std::vector<std::int64_t> col_sums(n, 0);
  std::int64_t grand = 0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      row_sums[k] += m(k, l);
      col_sums[l] += m(k, l);
    }
    grand += row_sums[k];
  }

  const double inv_pairs = 1.0 / static_cast<double>(n - 1);
  const double inv_all = 1.0 / static_cast<double>(n * n - n);
  CenteredScoreMatrix c(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (k == l) continue;
      c(k, l) = static_cast<double>(m(k, l)) -
                static_cast<double>(col_sums[l]) * inv_pairs -
                static_cast<double>(row_sums[k]) * inv_pairs +
                static_cast<double>(grand) * inv_all;
    }
  }
  return c;
}

// Squared Frobenius distance between two score matrices. Off-diagonal entries
// differ by 0 or +/-2, so this always equals 4x the disagreement count.
inline std::int64_t frobenius_distance_sq(const ScoreMatrix& a, const ScoreMatrix& b) {
  if (a.size() != b.size()) throw SizeError("score matrices differ in size");
  const std::size_t n = a.size();
  std::int64_t total = 0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      const std::int64_t d = static_cast<std::int64_t>(a(k, l)) - b(k, l);
      total += d * d;
    }
  }
  return total;
}

// Number of ordered pairs (k,l) whose scores differ between the two matrices.
inline std::int64_t sign_disagreement_count(const ScoreMatrix& a, const ScoreMatrix& b) {
  if (a.size() != b.size()) throw SizeError("score matrices differ in size");
  const std::size_t n = a.size();
  std::int64_t count = 0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (a(k, l) != b(k, l)) ++count;
    }
  }
  return count;
}

}  // namespace kemeny

#endif  // KEMENY_SCORE_MATRIX_HPP
