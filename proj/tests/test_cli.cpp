#include <algorithm>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli_runner.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

TEST(CorrelateCommand, PerfectMonotonePairInJson) {
  cli::ScratchDir dir;
  cli::write_file(dir.file("data.csv"), "a,b\n1,10\n2,20\n3,25\n4,70\n5,90\n");
  const cli::CommandResult r =
      cli::run("correlate --input " + dir.file("data.csv").string() + " --x a --y b");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["command"], "correlate");
  EXPECT_DOUBLE_EQ(j["estimate"]["value"].get<double>(), 1.0);
  EXPECT_TRUE(j["test"]["perfect_correlation"].get<bool>());
  EXPECT_TRUE(j["test"]["statistic"].is_null());
  EXPECT_DOUBLE_EQ(j["test"]["p_t"].get<double>(), 0.0);
}

TEST(CorrelateCommand, CsvFormatAndMethodChoice) {
  cli::ScratchDir dir;
  cli::write_file(dir.file("data.csv"), "a,b\n1,2\n2,1\n3,4\n4,3\n");
  const cli::CommandResult r =
      cli::run("correlate --input " + dir.file("data.csv").string() +
               " --x a --y b --method spearman --format csv");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("method,value,n,"), std::string::npos);
  EXPECT_NE(r.out.find("spearman,0.6,4,"), std::string::npos);
}

TEST(CorrelateCommand, MismatchedColumnNameIsUsageError) {
  cli::ScratchDir dir;
  cli::write_file(dir.file("data.csv"), "a,b\n1,2\n2,3\n3,4\n");
  const cli::CommandResult r =
      cli::run("correlate --input " + dir.file("data.csv").string() + " --x a --y zzz");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("zzz"), std::string::npos);
}

TEST(CorrelateCommand, ConstantColumnIsDataError) {
  cli::ScratchDir dir;
  cli::write_file(dir.file("data.csv"), "a,b\n5,1\n5,2\n5,3\n");
  const cli::CommandResult r =
      cli::run("correlate --input " + dir.file("data.csv").string() + " --x a --y b");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(CorrelateCommand, MalformedCellIsDataError) {
  cli::ScratchDir dir;
  cli::write_file(dir.file("data.csv"), "a,b\n1,2\n2,nan\n3,4\n");
  const cli::CommandResult r =
      cli::run("correlate --input " + dir.file("data.csv").string() + " --x a --y b");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("row 3"), std::string::npos);
}

TEST(CorrelateCommand, BadAlphaAndMissingFileAreUsageErrors) {
  cli::ScratchDir dir;
  cli::write_file(dir.file("data.csv"), "a,b\n1,2\n2,3\n3,4\n");
  const cli::CommandResult bad_alpha =
      cli::run("correlate --input " + dir.file("data.csv").string() +
               " --x a --y b --alpha 1.5");
  EXPECT_EQ(bad_alpha.exit_code, 1);

  const cli::CommandResult missing =
      cli::run("correlate --input " + dir.file("nope.csv").string() + " --x a --y b");
  EXPECT_EQ(missing.exit_code, 1);

  const cli::CommandResult bad_method =
      cli::run("correlate --input " + dir.file("data.csv").string() +
               " --x a --y b --method sorcery");
  EXPECT_EQ(bad_method.exit_code, 1);
}

TEST(SimulateCommand, SameSeedGivesByteIdenticalArtifacts) {
  cli::ScratchDir dir;
  const std::string base = "simulate --dist zero-inflated --n 12 --reps 150 --seed 99";
  const cli::CommandResult a =
      cli::run(base + " --out " + dir.file("a.json").string() + " --stats-out " +
               dir.file("a.csv").string());
  const cli::CommandResult b =
      cli::run(base + " --out " + dir.file("b.json").string() + " --stats-out " +
               dir.file("b.csv").string());
  ASSERT_EQ(a.exit_code, 0) << a.err;
  ASSERT_EQ(b.exit_code, 0) << b.err;
  EXPECT_EQ(cli::read_file(dir.file("a.json")), cli::read_file(dir.file("b.json")));
  EXPECT_EQ(cli::read_file(dir.file("a.csv")), cli::read_file(dir.file("b.csv")));
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("KS D="), std::string::npos);
}

TEST(SimulateCommand, ReportParsesAndCountsAddUp) {
  cli::ScratchDir dir;
  const cli::CommandResult r =
      cli::run("simulate --dist ordinal --n 6 --levels 2 --reps 200 --seed 5 --out " +
               dir.file("rep.json").string() + " --stats-out " +
               dir.file("stats.csv").string());
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const json j = json::parse(cli::read_file(dir.file("rep.json")));
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["generator"]["kind"], "ordinal");
  EXPECT_EQ(j["reps"], 200);
  const std::size_t kept = j["statistics"].size();
  const std::size_t excluded = j["excluded_degenerate"].get<std::size_t>() +
                               j["excluded_nonfinite"].get<std::size_t>();
  EXPECT_EQ(kept + excluded, 200u);

  const std::string stats = cli::read_file(dir.file("stats.csv"));
  EXPECT_EQ(stats.rfind("statistic\n", 0), 0u);
  const std::size_t lines = std::count(stats.begin(), stats.end(), '\n');
  EXPECT_EQ(lines, kept + 1);
}

TEST(SimulateCommand, DerivedSeedIsPrinted) {
  cli::ScratchDir dir;
  const cli::CommandResult r =
      cli::run("simulate --dist gaussian --n 5 --reps 100 --out " +
               dir.file("rep.json").string());
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("seed="), std::string::npos);
}

TEST(SimulateCommand, ConfigErrorsExitOne) {
  cli::ScratchDir dir;
  const std::string out = " --out " + dir.file("rep.json").string();
  EXPECT_EQ(cli::run("simulate --dist gaussian --n 30 --reps 50 --seed 1" + out).exit_code,
            1);
  EXPECT_EQ(cli::run("simulate --dist cauchy --n 30 --reps 200 --seed 1" + out).exit_code,
            1);
  EXPECT_EQ(cli::run("simulate --dist ordinal --levels 1 --n 30 --reps 200 --seed 1" + out)
                .exit_code,
            1);
  EXPECT_EQ(cli::run("simulate --dist gaussian --n 30 --reps 200 --seed 1" + out,
                     "KEMENY_THREADS=many ")
                .exit_code,
            1);
}

TEST(QqCommand, TableMatchesStatisticsFile) {
  cli::ScratchDir dir;
  const cli::CommandResult sim =
      cli::run("simulate --dist gaussian --n 12 --reps 120 --seed 3 --out " +
               dir.file("rep.json").string() + " --stats-out " +
               dir.file("stats.csv").string());
  ASSERT_EQ(sim.exit_code, 0) << sim.err;
  const cli::CommandResult qq =
      cli::run("qq --input " + dir.file("stats.csv").string() + " --df 10 --out " +
               dir.file("qq.csv").string());
  ASSERT_EQ(qq.exit_code, 0) << qq.err;

  const std::string table = cli::read_file(dir.file("qq.csv"));
  EXPECT_EQ(table.rfind("theoretical,empirical\n", 0), 0u);
  const std::string stats = cli::read_file(dir.file("stats.csv"));
  const std::size_t stats_lines = std::count(stats.begin(), stats.end(), '\n');
  const std::size_t table_lines = std::count(table.begin(), table.end(), '\n');
  EXPECT_EQ(table_lines, stats_lines);  // same data rows, each file has one header
}

TEST(QqCommand, ZeroDfIsUsageErrorEmptyInputIsDataError) {
  cli::ScratchDir dir;
  cli::write_file(dir.file("stats.csv"), "statistic\n0.5\n-0.25\n");
  EXPECT_EQ(cli::run("qq --input " + dir.file("stats.csv").string() + " --df 0 --out " +
                     dir.file("qq.csv").string())
                .exit_code,
            1);
  cli::write_file(dir.file("empty.csv"), "statistic\n");
  EXPECT_EQ(cli::run("qq --input " + dir.file("empty.csv").string() + " --df 5 --out " +
                     dir.file("qq.csv").string())
                .exit_code,
            2);
}

TEST(CompareCommand, TieFreeTableAgreesAcrossRankMethods) {
  cli::ScratchDir dir;
  cli::write_file(dir.file("data.csv"),
                  "a,b\n1,3\n2,1\n3,4\n4,2\n5,7\n6,5\n7,8\n8,6\n");
  const cli::CommandResult r =
      cli::run("compare --input " + dir.file("data.csv").string() + " --x a --y b");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j["estimates"].size(), 7u);
  double kemeny_value = 0.0;
  double spearman_value = 1.0;
  for (const auto& row : j["estimates"]) {
    EXPECT_EQ(row["status"], "ok");
    if (row["method"] == "kemeny") kemeny_value = row["value"].get<double>();
    if (row["method"] == "spearman") spearman_value = row["value"].get<double>();
  }
  EXPECT_NEAR(kemeny_value, spearman_value, 1e-12);
}

TEST(CompareCommand, AllTiedColumnFlagsRowsAndExitsTwo) {
  cli::ScratchDir dir;
  cli::write_file(dir.file("data.csv"), "a,b\n4,1\n4,2\n4,3\n4,4\n");
  const cli::CommandResult r =
      cli::run("compare --input " + dir.file("data.csv").string() + " --x a --y b");
  EXPECT_EQ(r.exit_code, 2);
  const json j = json::parse(r.out);
  std::size_t degenerate = 0;
  for (const auto& row : j["estimates"]) {
    if (row["status"] == "degenerate") ++degenerate;
  }
  EXPECT_EQ(degenerate, 7u);
}

TEST(CompareCommand, CsvFormatHasHeaderAndSevenRows) {
  cli::ScratchDir dir;
  cli::write_file(dir.file("data.csv"), "a,b\n1,2\n2,3\n3,1\n4,5\n");
  const cli::CommandResult r = cli::run("compare --input " + dir.file("data.csv").string() +
                                        " --x a --y b --format csv");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("method,value,n,in_range,status\n", 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 8);
}

TEST(TopLevel, NoSubcommandOrHelp) {
  EXPECT_EQ(cli::run("").exit_code, 1);
  EXPECT_EQ(cli::run("--help").exit_code, 0);
  EXPECT_EQ(cli::run("frobnicate").exit_code, 1);
}

}  // namespace
