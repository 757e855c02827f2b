// Command-line front end: correlation estimates, null-distribution
// simulations, QQ tables, and estimator comparisons over CSV inputs.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 data error
// (malformed file, too little data, degenerate input).

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kemeny/kemeny.hpp"

namespace {

using nlohmann::json;

unsigned threads_from_env() {
  const char* raw = std::getenv("KEMENY_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  const std::string value(raw);
  if (value == "auto") return 0;
  unsigned parsed = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw kemeny::ConfigError("KEMENY_THREADS must be a non-negative integer or \"auto\"");
  }
  return parsed;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw kemeny::ConfigError("cannot open file for writing: " + path);
  return out;
}

std::string fmt(double v) { return kemeny::detail::format_double(v); }

const char* fmt(bool v) { return v ? "true" : "false"; }

void require_alpha(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw kemeny::ConfigError("--alpha must lie strictly between 0 and 1");
  }
}

struct CorrelateArgs {
  std::string input;
  std::string x;
  std::string y;
  kemeny::Method method = kemeny::Method::kemeny;
  double alpha = 0.05;
  std::string format = "json";
};

int run_correlate(const CorrelateArgs& args) {
  require_alpha(args.alpha);
  const kemeny::Dataset data = kemeny::load_csv(args.input);
  const auto& x = data.column(args.x);
  const auto& y = data.column(args.y);
  const kemeny::CorrelationEstimate est = kemeny::estimate(args.method, x, y);
  const kemeny::TestResult test = kemeny::make_test_result(est.value, est.n, args.alpha);

  if (args.format == "json") {
    const json out{
        {"schema_version", kemeny::kSchemaVersion},
        {"command", "correlate"},
        {"input", args.input},
        {"x", args.x},
        {"y", args.y},
        {"estimate", est},
        {"test", test},
    };
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "method,value,n,in_range,statistic,df,p_t,p_normal,alpha,"
                 "reject_t,reject_normal,perfect_correlation\n";
    std::cout << to_string(est.method) << ',' << fmt(est.value) << ',' << est.n << ','
              << fmt(est.in_range) << ',' << fmt(test.statistic) << ',' << test.df << ','
              << fmt(test.p_t) << ',' << fmt(test.p_normal) << ',' << fmt(test.alpha) << ','
              << fmt(test.reject_t) << ',' << fmt(test.reject_normal) << ','
              << fmt(test.perfect_correlation) << '\n';
  }
  return 0;
}

struct SimulateArgs {
  kemeny::Generator dist = kemeny::Generator::gaussian;
  std::size_t n = 30;
  std::size_t reps = 0;
  std::optional<std::uint64_t> seed;
  int levels = 5;
  double zero_mass = 0.3;
  std::string out_path;
  std::string stats_path;
};

int run_simulate(const SimulateArgs& args) {
  kemeny::GeneratorSpec spec;
  spec.kind = args.dist;
  spec.n = args.n;
  spec.levels = args.levels;
  spec.zero_mass = args.zero_mass;
  if (args.seed) {
    spec.seed = *args.seed;
  } else {
    std::random_device entropy;
    spec.seed = (static_cast<std::uint64_t>(entropy()) << 32) ^ entropy();
    std::cout << "seed=" << spec.seed << '\n';
  }

  const kemeny::SimulationReport report =
      kemeny::run_null_simulation(spec, args.reps, threads_from_env());

  {
    std::ofstream out = open_output(args.out_path);
    const json j = report;
    out << j.dump(2) << '\n';
  }
  if (!args.stats_path.empty()) {
    std::ofstream out = open_output(args.stats_path);
    out << "statistic\n";
    for (double t : report.statistics) out << fmt(t) << '\n';
  }

  std::cout << "KS D=" << fmt(report.ks.d) << " p=" << fmt(report.ks.p)
            << " (m=" << report.ks.n << ", df=" << spec.n - 2 << ")\n";
  if (report.excluded_degenerate > 0 || report.excluded_nonfinite > 0) {
    std::cout << "excluded: degenerate=" << report.excluded_degenerate
              << " nonfinite=" << report.excluded_nonfinite << '\n';
  }
  return 0;
}

struct QqArgs {
  std::string input;
  int df = 0;
  std::string out_path;
};

int run_qq(const QqArgs& args) {
  const kemeny::Dataset data = kemeny::load_csv(args.input);
  if (data.columns.empty() || data.columns[0].empty()) {
    throw kemeny::SizeError("no statistics to plot");
  }
  std::vector<double> sorted = data.columns[0];
  std::sort(sorted.begin(), sorted.end());
  const std::size_t m = sorted.size();

  std::ofstream out = open_output(args.out_path);
  out << "theoretical,empirical\n";
  for (std::size_t i = 0; i < m; ++i) {
    const double level = (static_cast<double>(i) + 0.5) / static_cast<double>(m);
    out << fmt(kemeny::student_t_quantile(level, args.df)) << ',' << fmt(sorted[i]) << '\n';
  }
  std::cout << "wrote " << m << " quantile pairs to " << args.out_path << '\n';
  return 0;
}

struct CompareArgs {
  std::string input;
  std::string x;
  std::string y;
  std::string format = "json";
};

int run_compare(const CompareArgs& args) {
  const kemeny::Dataset data = kemeny::load_csv(args.input);
  const auto& x = data.column(args.x);
  const auto& y = data.column(args.y);

  constexpr kemeny::Method kMethods[] = {
      kemeny::Method::kemeny,         kemeny::Method::spearman,
      kemeny::Method::kendall_a,      kemeny::Method::kendall_b,
      kemeny::Method::pearson,        kemeny::Method::ustat_pairwise,
      kemeny::Method::ustat_rowsum,
  };

  struct Row {
    kemeny::Method method;
    std::optional<kemeny::CorrelationEstimate> estimate;
    std::string status = "ok";
    std::string message;
  };
  std::vector<Row> rows;
  bool any_flagged = false;
  for (const kemeny::Method method : kMethods) {
    Row row{method, std::nullopt, "ok", ""};
    try {
      row.estimate = kemeny::estimate(method, x, y);
    } catch (const kemeny::DegenerateInputError& e) {
      row.status = "degenerate";
      row.message = e.what();
      any_flagged = true;
    } catch (const kemeny::InvalidValueError& e) {
      row.status = "invalid";
      row.message = e.what();
      any_flagged = true;
    }
    rows.push_back(std::move(row));
  }

  if (args.format == "json") {
    json estimates = json::array();
    for (const Row& row : rows) {
      json entry{{"method", to_string(row.method)}, {"status", row.status}};
      if (row.estimate) {
        entry["value"] = row.estimate->value;
        entry["n"] = row.estimate->n;
        entry["in_range"] = row.estimate->in_range;
      } else {
        entry["error"] = row.message;
      }
      estimates.push_back(std::move(entry));
    }
    const json out{
        {"schema_version", kemeny::kSchemaVersion},
        {"command", "compare"},
        {"input", args.input},
        {"x", args.x},
        {"y", args.y},
        {"n", x.size()},
        {"estimates", estimates},
    };
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "method,value,n,in_range,status\n";
    for (const Row& row : rows) {
      std::cout << to_string(row.method) << ',';
      if (row.estimate) {
        std::cout << fmt(row.estimate->value) << ',' << row.estimate->n << ','
                  << fmt(row.estimate->in_range) << ',';
      } else {
        std::cout << ",,,";
      }
      std::cout << row.status << '\n';
    }
  }
  return any_flagged ? 2 : 0;
}

template <typename F>
int run_guarded(F&& f) {
  try {
    return f();
  } catch (const kemeny::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const kemeny::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-score correlation toolkit"};
  app.require_subcommand(1);

  const std::map<std::string, kemeny::Method> method_names{
      {"kemeny", kemeny::Method::kemeny},
      {"spearman", kemeny::Method::spearman},
      {"kendall-a", kemeny::Method::kendall_a},
      {"kendall-b", kemeny::Method::kendall_b},
      {"pearson", kemeny::Method::pearson},
      {"ustat-pairwise", kemeny::Method::ustat_pairwise},
      {"ustat-rowsum", kemeny::Method::ustat_rowsum},
  };
  const std::map<std::string, kemeny::Generator> dist_names{
      {"gaussian", kemeny::Generator::gaussian},
      {"ordinal", kemeny::Generator::ordinal},
      {"zero-inflated", kemeny::Generator::zero_inflated},
  };

  CorrelateArgs correlate;
  CLI::App* correlate_cmd =
      app.add_subcommand("correlate", "Estimate a correlation and test independence");
  correlate_cmd->add_option("--input", correlate.input, "CSV file with a header row")
      ->required();
  correlate_cmd->add_option("--x", correlate.x, "Name of the first column")->required();
  correlate_cmd->add_option("--y", correlate.y, "Name of the second column")->required();
  correlate_cmd->add_option("--method", correlate.method, "Correlation estimator")
      ->transform(CLI::CheckedTransformer(method_names, CLI::ignore_case));
  correlate_cmd->add_option("--alpha", correlate.alpha, "Two-sided significance level");
  correlate_cmd->add_option("--format", correlate.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  SimulateArgs simulate;
  CLI::App* simulate_cmd =
      app.add_subcommand("simulate", "Sample the null distribution of the t statistic");
  simulate_cmd->add_option("--dist", simulate.dist, "Marginal distribution")
      ->transform(CLI::CheckedTransformer(dist_names, CLI::ignore_case));
  simulate_cmd->add_option("--n", simulate.n, "Observations per replicate")->required();
  simulate_cmd->add_option("--reps", simulate.reps, "Number of replicates")->required();
  simulate_cmd->add_option("--seed", simulate.seed, "RNG seed (derived from entropy if omitted)");
  simulate_cmd->add_option("--levels", simulate.levels, "Ordinal categories");
  simulate_cmd->add_option("--zero-mass", simulate.zero_mass, "Zero-inflation probability");
  simulate_cmd->add_option("--out", simulate.out_path, "Path for the JSON report")->required();
  simulate_cmd->add_option("--stats-out", simulate.stats_path,
                           "Optional path for a one-column CSV of t statistics");

  QqArgs qq;
  CLI::App* qq_cmd = app.add_subcommand("qq", "Quantile-quantile table against Student t");
  qq_cmd->add_option("--input", qq.input, "One-column CSV of statistics")->required();
  qq_cmd->add_option("--df", qq.df, "Degrees of freedom")
      ->required()
      ->check(CLI::PositiveNumber);
  qq_cmd->add_option("--out", qq.out_path, "Path for the CSV table")->required();

  CompareArgs compare;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Run every estimator on the same column pair");
  compare_cmd->add_option("--input", compare.input, "CSV file with a header row")->required();
  compare_cmd->add_option("--x", compare.x, "Name of the first column")->required();
  compare_cmd->add_option("--y", compare.y, "Name of the second column")->required();
  compare_cmd->add_option("--format", compare.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (correlate_cmd->parsed()) return run_guarded([&] { return run_correlate(correlate); });
  if (simulate_cmd->parsed()) return run_guarded([&] { return run_simulate(simulate); });
  if (qq_cmd->parsed()) return run_guarded([&] { return run_qq(qq); });
  return run_guarded([&] { return run_compare(compare); });
}
