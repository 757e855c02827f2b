#ifndef KEMENY_REPORT_JSON_HPP
#define KEMENY_REPORT_JSON_HPP

#include <string>

#include "json.hpp"
#include "kemeny/estimators.hpp"
#include "kemeny/inference.hpp"
#include "kemeny/simulate.hpp"

namespace kemeny {

inline constexpr int kSchemaVersion = 1;

// Note: JSON has no representation for infinities; a perfect-correlation
// statistic serializes as null, with perfect_correlation set alongside.
inline void to_json(nlohmann::json& j, const CorrelationEstimate& e) {
  j = nlohmann::json{
      {"method", to_string(e.method)},
      {"value", e.value},
      {"n", e.n},
      {"in_range", e.in_range},
  };
}

inline void to_json(nlohmann::json& j, const TestResult& r) {
  j = nlohmann::json{
      {"statistic", r.statistic},
      {"df", r.df},
      {"p_t", r.p_t},
      {"p_normal", r.p_normal},
      {"alpha", r.alpha},
      {"reject_t", r.reject_t},
      {"reject_normal", r.reject_normal},
      {"perfect_correlation", r.perfect_correlation},
  };
}

inline void to_json(nlohmann::json& j, const KsResult& r) {
  j = nlohmann::json{{"d", r.d}, {"p", r.p}, {"n", r.n}};
}

inline void to_json(nlohmann::json& j, const GeneratorSpec& s) {
  j = nlohmann::json{
      {"kind", to_string(s.kind)},
      {"n", s.n},
      {"seed", s.seed},
  };
  if (s.kind == Generator::ordinal) j["levels"] = s.levels;
  if (s.kind == Generator::zero_inflated) j["zero_mass"] = s.zero_mass;
}

inline void to_json(nlohmann::json& j, const SimulationReport& r) {
  j = nlohmann::json{
      {"schema_version", kSchemaVersion},
      {"generator", r.spec},
      {"reps", r.reps},
      {"rng_algorithm", r.rng_algorithm},
      {"excluded_degenerate", r.excluded_degenerate},
      {"excluded_nonfinite", r.excluded_nonfinite},
      {"mean_rho", r.mean_rho},
      {"ks", r.ks},
      {"statistics", r.statistics},
      {"qq", r.qq},
  };
}

}  // namespace kemeny

#endif  // KEMENY_REPORT_JSON_HPP
