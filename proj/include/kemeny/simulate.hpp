#ifndef KEMENY_SIMULATE_HPP
#define KEMENY_SIMULATE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "kemeny/errors.hpp"
#include "kemeny/estimators.hpp"
#include "kemeny/inference.hpp"
#include "kemeny/rng.hpp"

namespace kemeny {

enum class Generator {
  gaussian,
  ordinal,
  zero_inflated,
};

inline const char* to_string(Generator g) {
  switch (g) {
    case Generator::gaussian: return "gaussian";
    case Generator::ordinal: return "ordinal";
    case Generator::zero_inflated: return "zero-inflated";
  }
  return "unknown";
}

struct GeneratorSpec {
  Generator kind = Generator::gaussian;
  std::size_t n = 30;
  int levels = 5;          // ordinal: number of equiprobable categories
  double zero_mass = 0.3;  // zero-inflated: probability of an exact zero
  std::uint64_t seed = 0;
};

inline void validate(const GeneratorSpec& spec) {
  if (spec.n < 3) throw ConfigError("sample size must be at least 3");
  if (spec.levels < 2) throw ConfigError("ordinal generator needs at least 2 levels");
  if (!(spec.zero_mass >= 0.0) || !(spec.zero_mass < 1.0)) {
    throw ConfigError("zero mass must lie in [0, 1)");
  }
}

namespace detail {

inline double draw(const GeneratorSpec& spec, Xoshiro256pp& rng) {
  switch (spec.kind) {
    case Generator::gaussian:
      return rng.normal();
    case Generator::ordinal: {
      int level = static_cast<int>(rng.uniform01() * spec.levels);
      if (level >= spec.levels) level = spec.levels - 1;
      return static_cast<double>(level + 1);
    }
    case Generator::zero_inflated:
      if (rng.uniform01() < spec.zero_mass) return 0.0;
      return rng.exponential();
  }
  return 0.0;
}

}  // namespace detail

// Independent (x, y) sample for one replicate. The generator state depends
// only on (seed, replicate), never on execution order.
inline std::pair<std::vector<double>, std::vector<double>> generate_pair(
    const GeneratorSpec& spec, std::uint64_t replicate) {
  validate(spec);
  Xoshiro256pp rng(spec.seed, replicate);
  std::vector<double> x;
  std::vector<double> y;
  x.reserve(spec.n);
  y.reserve(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) x.push_back(detail::draw(spec, rng));
  for (std::size_t i = 0; i < spec.n; ++i) y.push_back(detail::draw(spec, rng));
  return {std::move(x), std::move(y)};
}

struct SimulationReport {
  GeneratorSpec spec;
  std::size_t reps = 0;                        // requested replicates
  std::vector<double> statistics;              // finite t values, replicate order
  KsResult ks;                                 // against Student t with n-2 df
  std::vector<std::pair<double, double>> qq;   // (theoretical, empirical) quantiles
  double mean_rho = 0.0;
  std::string rng_algorithm = kRngAlgorithm;
  std::size_t excluded_degenerate = 0;         // all-tied draws, skipped with a count
  std::size_t excluded_nonfinite = 0;          // |rho| = 1 draws, skipped with a count
};

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Null-distribution run: `reps` independent replicates, each studentized, then
// compared against the t reference by KS and laid out as QQ pairs. Results are
// byte-identical for a given (spec, reps) regardless of the thread count.
inline SimulationReport run_null_simulation(const GeneratorSpec& spec, std::size_t reps,
                                            unsigned threads = 0) {
  validate(spec);
  if (reps < 100) throw ConfigError("need at least 100 replicates");

  enum class Status : std::uint8_t { ok, degenerate, nonfinite };
  struct Slot {
    double t = 0.0;
    double rho = 0.0;
    Status status = Status::ok;
  };
  std::vector<Slot> slots(reps);

  const auto worker = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < reps; i += stride) {
      const auto [x, y] = generate_pair(spec, i);
      Slot& slot = slots[i];
      try {
        const CorrelationEstimate est = rho_kappa(x, y);
        slot.rho = est.value;
        slot.t = t_statistic(est.value, est.n);
        slot.status = std::isfinite(slot.t) ? Status::ok : Status::nonfinite;
      } catch (const DegenerateInputError&) {
        slot.status = Status::degenerate;
      }
    }
  };

  const unsigned thread_count =
      static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), reps));
  if (thread_count <= 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (unsigned t = 0; t < thread_count; ++t) {
      pool.emplace_back(worker, t, thread_count);
    }
    for (auto& th : pool) th.join();
  }

  SimulationReport report;
  report.spec = spec;
  report.reps = reps;
  double rho_sum = 0.0;
  std::size_t rho_count = 0;
  for (const Slot& slot : slots) {
    switch (slot.status) {
      case Status::degenerate:
        ++report.excluded_degenerate;
        break;
      case Status::nonfinite:
        ++report.excluded_nonfinite;
        rho_sum += slot.rho;
        ++rho_count;
        break;
      case Status::ok:
        report.statistics.push_back(slot.t);
        rho_sum += slot.rho;
        ++rho_count;
        break;
    }
  }
  if (rho_count > 0) report.mean_rho = rho_sum / static_cast<double>(rho_count);

  const int df = static_cast<int>(spec.n) - 2;
  report.ks = ks_one_sample(report.statistics,
                            [df](double v) { return student_t_cdf(v, df); });

  std::vector<double> sorted(report.statistics);
  std::sort(sorted.begin(), sorted.end());
  const std::size_t m = sorted.size();
  report.qq.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double level = (static_cast<double>(i) + 0.5) / static_cast<double>(m);
    report.qq.emplace_back(student_t_quantile(level, df), sorted[i]);
  }
  return report;
}

}  // namespace kemeny

#endif  // KEMENY_SIMULATE_HPP
