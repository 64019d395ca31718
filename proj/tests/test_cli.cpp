// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks against the installed command-line binary: exit codes,
// output schemas, and byte-identical reruns.
#include <gtest/gtest.h>

#include <filesystem>
#include <string>

#include "metasurf/config.hpp"
#include "test_helpers.hpp"

using testutil::CliResult;
using testutil::read_file;
using testutil::run_cli;
using testutil::scratch_dir;
using testutil::write_file;

namespace fs = std::filesystem;

namespace {

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST(Cli, NoSubcommandPrintsHelpAndFailsUsage) {
  const fs::path dir = scratch_dir("cli_help");
  const CliResult r = run_cli("", dir);
  EXPECT_EQ(r.exit_code, 2);
}

TEST(Cli, HelpExitsCleanly) {
  const fs::path dir = scratch_dir("cli_help_flag");
  const CliResult r = run_cli("--help", dir);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("sweep"), std::string::npos);
  EXPECT_NE(r.out.find("simulate"), std::string::npos);
}

TEST(Cli, WriteDefaultConfigRoundTrips) {
  const fs::path dir = scratch_dir("cli_defcfg");
  const fs::path cfg_path = dir / "metasurf.json";
  const CliResult r = run_cli("--write-default-config " + cfg_path.string(), dir);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  ASSERT_TRUE(fs::exists(cfg_path));
  // The emitted file must be loadable and complete.
  const metasurf::Config cfg = metasurf::Config::from_file(cfg_path.string());
  EXPECT_TRUE(cfg.defaults_used().empty());
}

TEST(Cli, TuneReportsBiasAndBand) {
  const fs::path dir = scratch_dir("cli_tune");
  const CliResult r = run_cli("tune --target 17e9", dir);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("bias_v 18.9953956"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("achieved_hz"), std::string::npos);
  EXPECT_NE(r.out.find("band_low_hz"), std::string::npos);
  EXPECT_NE(r.out.find("band_high_hz"), std::string::npos);
}

TEST(Cli, TuneAtBandEdgeGivesZeroBias) {
  const fs::path dir = scratch_dir("cli_tune_edge");
  const CliResult r = run_cli("tune --target 5481099795.9458828", dir);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("bias_v 0\n"), std::string::npos) << r.out;
}

TEST(Cli, TuneOutsideBandIsADomainFailure) {
  const fs::path dir = scratch_dir("cli_tune_oob");
  const CliResult r = run_cli("tune --target 25e9", dir);
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_NE(r.err.find("achievable band"), std::string::npos) << r.err;
}

TEST(Cli, SweepWritesCsvAndManifest) {
  const fs::path dir = scratch_dir("cli_sweep");
  const fs::path out = dir / "sweep.csv";
  const CliResult r = run_cli("sweep --bias 19 --out " + out.string(), dir);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const std::string csv = read_file(out);
  EXPECT_EQ(csv.rfind("freq_hz,s11_re,s11_im,s21_re,s21_im,s11_db,s21_db\n", 0), 0u);
  EXPECT_EQ(count_lines(csv), 1 + 1001);
  EXPECT_TRUE(fs::exists(out.string() + ".manifest.json"));
  // The default Design A stack tuned to max bias notches at 17.005 GHz,
  // which the 10-25 GHz default grid samples exactly.
  EXPECT_NE(r.out.find("min_s21_db"), std::string::npos);
  EXPECT_NE(r.out.find("at_hz 1.7005e+10"), std::string::npos) << r.out;
}

TEST(Cli, SweepHonorsCustomRange) {
  const fs::path dir = scratch_dir("cli_sweep_range");
  const fs::path out = dir / "low.csv";
  const CliResult r =
      run_cli("sweep --bias 0 --from 2e9 --to 10e9 --points 801 --out " + out.string(), dir);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(count_lines(read_file(out)), 1 + 801);
  // Zero bias tunes the notch to the bottom band edge near 5.48 GHz.
  EXPECT_NE(r.out.find("at_hz 5.48e+09"), std::string::npos) << r.out;
}

TEST(Cli, SweepRejectsConflictingTuningValues) {
  const fs::path dir = scratch_dir("cli_sweep_conflict");
  const CliResult r = run_cli("sweep --bias 19 --capacitance 1e-12", dir);
  EXPECT_EQ(r.exit_code, 2);
}

TEST(Cli, SweepRejectsDegenerateGrid) {
  const fs::path dir = scratch_dir("cli_sweep_grid");
  const CliResult r = run_cli("sweep --bias 19 --points 1 --out " + (dir / "x.csv").string(), dir);
  EXPECT_EQ(r.exit_code, 2);
}

TEST(Cli, SweepWithBiasBeyondRangeIsADomainFailure) {
  const fs::path dir = scratch_dir("cli_sweep_bias");
  const CliResult r = run_cli("sweep --bias 30 --out " + (dir / "x.csv").string(), dir);
  EXPECT_EQ(r.exit_code, 3);
}

TEST(Cli, MissingConfigFileIsAUsageFailure) {
  const fs::path dir = scratch_dir("cli_nocfg");
  const CliResult r = run_cli("--config /nonexistent.json tune --target 17e9", dir);
  EXPECT_EQ(r.exit_code, 2);
}

TEST(Cli, BadConfigValueNamesTheKeyPath) {
  const fs::path dir = scratch_dir("cli_badcfg");
  const fs::path cfg = dir / "bad.json";
  write_file(cfg, R"({ "noise": { "bandwidth_hz": "wide" } })");
  const CliResult r = run_cli("--config " + cfg.string() + " simulate --out " +
                                  (dir / "out").string(),
                              dir);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("noise.bandwidth_hz"), std::string::npos) << r.err;
}

TEST(Cli, EmptySurfaceListIsAUsageFailure) {
  const fs::path dir = scratch_dir("cli_nosurf");
  const fs::path cfg = dir / "empty.json";
  write_file(cfg, R"({ "scenario_a": { "surfaces": [] } })");
  const CliResult r = run_cli("--config " + cfg.string() + " simulate --out " +
                                  (dir / "out").string(),
                              dir);
  EXPECT_EQ(r.exit_code, 2);
}

TEST(Cli, SimulateWritesResultsSummaryManifest) {
  const fs::path dir = scratch_dir("cli_simulate");
  const fs::path out = dir / "out";
  const CliResult r = run_cli("simulate --out " + out.string(), dir);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  ASSERT_TRUE(fs::exists(out / "results.csv"));
  ASSERT_TRUE(fs::exists(out / "summary.json"));
  ASSERT_TRUE(fs::exists(out / "manifest.json"));
  EXPECT_NE(r.out.find("check frics_a_highest_sinr true"), std::string::npos) << r.out;
  const std::string csv = read_file(out / "results.csv");
  EXPECT_EQ(csv.rfind("tx_power_dbm,surface,metric,value\n", 0), 0u);
  EXPECT_EQ(count_lines(csv), 1 + 13 * 4 * 4);
}

TEST(Cli, SimulateRerunsAreByteIdentical) {
  const fs::path dir = scratch_dir("cli_determinism");
  const fs::path out1 = dir / "run1";
  const fs::path out2 = dir / "run2";
  ASSERT_EQ(run_cli("simulate --out " + out1.string(), dir).exit_code, 0);
  ASSERT_EQ(run_cli("simulate --out " + out2.string(), dir).exit_code, 0);
  EXPECT_EQ(read_file(out1 / "results.csv"), read_file(out2 / "results.csv"));
  EXPECT_EQ(read_file(out1 / "summary.json"), read_file(out2 / "summary.json"));
}

TEST(Cli, SimulateDesignBEmitsNoPathRows) {
  const fs::path dir = scratch_dir("cli_design_b");
  const fs::path out = dir / "out";
  const CliResult r = run_cli("simulate --design B --out " + out.string(), dir);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const std::string csv = read_file(out / "results.csv");
  EXPECT_EQ(count_lines(csv), 1 + 13 * 4 * 5);
  EXPECT_NE(csv.find(",no_path\n"), std::string::npos);
  EXPECT_NE(r.out.find("check frics_b_highest_rsu_snr true"), std::string::npos) << r.out;
}

TEST(Cli, CompareTabulatesPowerDraw) {
  const fs::path dir = scratch_dir("cli_compare");
  const CliResult r = run_cli("compare", dir);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("surface"), std::string::npos);
  EXPECT_NE(r.out.find("1.68"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("1.93"), std::string::npos);
  EXPECT_NE(r.out.find("11.53"), std::string::npos);
}

TEST(Cli, CompareDesignBShowsNoPathCells) {
  const fs::path dir = scratch_dir("cli_compare_b");
  const CliResult r = run_cli("compare --design B", dir);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("no_path"), std::string::npos) << r.out;
}
