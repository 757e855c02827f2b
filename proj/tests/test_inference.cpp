#include "kemeny/inference.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "kemeny/rng.hpp"
#include "test_util.hpp"

namespace {

using kemeny::ks_one_sample;
using kemeny::KsResult;
using kemeny::make_test_result;
using kemeny::t_statistic;
using kemeny::test_independence;
using kemeny::TestResult;

TEST(TStatistic, KnownValues) {
  EXPECT_DOUBLE_EQ(t_statistic(0.0, 30), 0.0);
  // rho = 0.5, n = 14: 0.5 * sqrt(12) / sqrt(0.75) = 2.
  EXPECT_NEAR(t_statistic(0.5, 14), 2.0, 1e-12);
  EXPECT_NEAR(t_statistic(std::sqrt(0.5), 4), std::sqrt(2.0) / 1.0, 1e-12);
}

TEST(TStatistic, PerfectCorrelationGivesSignedInfinity) {
  EXPECT_EQ(t_statistic(1.0, 10), std::numeric_limits<double>::infinity());
  EXPECT_EQ(t_statistic(-1.0, 10), -std::numeric_limits<double>::infinity());
}

TEST(TStatistic, RejectsBadArguments) {
  EXPECT_THROW(t_statistic(1.0000001, 10), kemeny::InvalidValueError);
  EXPECT_THROW(t_statistic(std::numeric_limits<double>::quiet_NaN(), 10),
               kemeny::InvalidValueError);
  EXPECT_THROW(t_statistic(0.5, 2), kemeny::SizeError);
}

TEST(TestIndependence, PerfectMonotoneAssociation) {
  const std::vector<double> x{1.0, 2.0, 3.0, 4.0, 5.0};
  const std::vector<double> y{2.0, 4.0, 5.0, 9.0, 10.0};
  const TestResult r = test_independence(x, y, 0.05);
  EXPECT_TRUE(r.perfect_correlation);
  EXPECT_EQ(r.statistic, std::numeric_limits<double>::infinity());
  EXPECT_EQ(r.p_t, 0.0);
  EXPECT_EQ(r.p_normal, 0.0);
  EXPECT_TRUE(r.reject_t);
  EXPECT_TRUE(r.reject_normal);
}

TEST(TestIndependence, ExactlyUncorrelatedPairGivesUnitPValue) {
  // This permutation pair has exactly zero rank correlation.
  const std::vector<double> x{1.0, 2.0, 3.0, 4.0};
  const std::vector<double> y{2.0, 4.0, 1.0, 3.0};
  const TestResult r = test_independence(x, y, 0.05);
  EXPECT_EQ(r.statistic, 0.0);
  EXPECT_EQ(r.p_t, 1.0);
  EXPECT_FALSE(r.reject_t);
  EXPECT_FALSE(r.reject_normal);
}

TEST(TestIndependence, DegreesOfFreedomAndAlphaPropagate) {
  std::mt19937_64 rng(41);
  const auto x = testutil::random_values(rng, 23);
  const auto y = testutil::random_values(rng, 23);
  const TestResult r = test_independence(x, y, 0.10);
  EXPECT_EQ(r.df, 21);
  EXPECT_DOUBLE_EQ(r.alpha, 0.10);
  EXPECT_EQ(r.reject_t, r.p_t < 0.10);
  EXPECT_EQ(r.reject_normal, r.p_normal < 0.10);
  EXPECT_GE(r.p_t, 0.0);
  EXPECT_LE(r.p_t, 1.0);
}

TEST(TestIndependence, NormalPValueIsSmallerInTheTails) {
  // The normal reference has lighter tails than t, so it rejects more easily.
  const TestResult r = make_test_result(0.45, 20, 0.05);
  EXPECT_LT(r.p_normal, r.p_t);
}

TEST(TestIndependence, RejectsBadAlpha) {
  const std::vector<double> x{1.0, 2.0, 3.0, 4.0};
  EXPECT_THROW(test_independence(x, x, 0.0), kemeny::InvalidValueError);
  EXPECT_THROW(test_independence(x, x, 1.0), kemeny::InvalidValueError);
}

TEST(TestIndependence, NullRejectionRateNearNominal) {
  // Under independent gaussian draws the studentized statistic should reject
  // at close to the nominal level.
  const std::size_t reps = 2000;
  const std::size_t n = 30;
  std::size_t rejections = 0;
  for (std::size_t rep = 0; rep < reps; ++rep) {
    kemeny::Xoshiro256pp rng(916, rep);
    std::vector<double> x(n);
    std::vector<double> y(n);
    for (double& v : x) v = rng.normal();
    for (double& v : y) v = rng.normal();
    if (test_independence(x, y, 0.05).reject_t) ++rejections;
  }
  const double rate = static_cast<double>(rejections) / static_cast<double>(reps);
  EXPECT_GE(rate, 0.04);
  EXPECT_LE(rate, 0.06);
}

double uniform_cdf(double v) {
  if (v <= 0.0) return 0.0;
  if (v >= 1.0) return 1.0;
  return v;
}

TEST(KsOneSample, DetectsExactQuantileSample) {
  // Points laid exactly at the (i - 0.5)/m quantiles keep D at 0.5/m.
  const std::size_t m = 50;
  std::vector<double> sample(m);
  for (std::size_t i = 0; i < m; ++i) {
    sample[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(m);
  }
  const KsResult r = ks_one_sample(sample, uniform_cdf);
  EXPECT_NEAR(r.d, 0.5 / static_cast<double>(m), 1e-12);
  EXPECT_GT(r.p, 0.999999);
}

TEST(KsOneSample, FlagsGrossMismatch) {
  // A sample crammed into [0, 0.1] is nowhere near uniform on [0, 1].
  std::vector<double> sample(100);
  for (std::size_t i = 0; i < 100; ++i) {
    sample[i] = 0.001 * static_cast<double>(i + 1);
  }
  const KsResult r = ks_one_sample(sample, uniform_cdf);
  EXPECT_GT(r.d, 0.8);
  EXPECT_LT(r.p, 1e-10);
}

TEST(KsOneSample, AgreesWithDirectDefinition) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<double> sample(37);
  for (double& v : sample) v = dist(rng);
  const KsResult r = ks_one_sample(sample, uniform_cdf);

  std::vector<double> sorted = sample;
  std::sort(sorted.begin(), sorted.end());
  double d = 0.0;
  const double m = static_cast<double>(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = uniform_cdf(sorted[i]);
    d = std::max(d, std::max((static_cast<double>(i) + 1.0) / m - f,
                             f - static_cast<double>(i) / m));
  }
  EXPECT_DOUBLE_EQ(r.d, d);
  EXPECT_EQ(r.n, sorted.size());
}

TEST(KsOneSample, RejectsSmallOrInvalidSamples) {
  std::vector<double> tiny(9, 0.5);
  EXPECT_THROW(ks_one_sample(tiny, uniform_cdf), kemeny::SizeError);
  std::vector<double> with_nan(12, 0.5);
  with_nan[3] = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(ks_one_sample(with_nan, uniform_cdf), kemeny::InvalidValueError);
}

}  // namespace
