#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "cdlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cdlab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Quantity column of the row for k, or NaN when absent.
double quantity_at(const std::string& csv, int k) {
  const std::string key = "\n" + std::to_string(k) + "," + std::to_string(k) + ",";
  const auto pos = csv.find(key);
  if (pos == std::string::npos) return std::nan("");
  return std::stod(csv.substr(pos + key.size()));
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "cdlab_test_cli";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, SzegoToStdout) {
  const auto r = invoke({"szego", "--k", "4,8,16", "--no-timing"});
  ASSERT_EQ(r.code, cdlab::cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("# experiment=szego"), std::string::npos);
  // (k - 1) / (2k) at k = 4.
  EXPECT_NEAR(quantity_at(r.out, 4), 0.375, 1e-12) << r.out;
  EXPECT_NE(r.out.find(",0.5,"), std::string::npos);
  EXPECT_NE(r.out.find(",0\n"), std::string::npos);
}

TEST(Cli, EveryExperimentRuns) {
  for (const char* name : {"szego", "algebra", "offdiag", "heatmap", "bm", "symbol_distance"}) {
    const auto out = scratch(std::string(name) + ".csv");
    const auto r = invoke({name, "--k", "4,8,16", "--min-nodes", "64", "--out", out.string()});
    EXPECT_EQ(r.code, 0) << name << ": " << r.err;
    EXPECT_TRUE(std::filesystem::exists(out)) << name;
  }
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, cdlab::cli::kExitConfig);
  EXPECT_EQ(invoke({"nosuch"}).code, 2);
  EXPECT_EQ(invoke({"szego", "--bogus"}).code, 2);
  EXPECT_EQ(invoke({"szego", "--k", "8,4"}).code, 2);
  EXPECT_EQ(invoke({"szego", "--k", "4,x"}).code, 2);
  EXPECT_EQ(invoke({"szego", "--k", "4,8", "--p", "0.5"}).code, 2);
  EXPECT_EQ(invoke({"szego", "--k", "4,8", "--symbol-f", "nope"}).code, 2);
  EXPECT_EQ(invoke({"szego", "--k", "4,8", "--out", "/nonexistent-dir/x.csv"}).code, 2);
  EXPECT_EQ(invoke({"szego", "--config", scratch("missing.json").string()}).code, 2);
  EXPECT_EQ(invoke({"offdiag", "--k", "4,8", "--region-a", "0"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("szego"), std::string::npos);
}

TEST(Cli, RankDeficientMeasureExitsThree) {
  const auto path = scratch("atom.json");
  std::ofstream(path) << R"({"nodes": [[0.25, 0]], "weights": [1]})";
  const auto r = invoke({"szego", "--k", "1,2,4", "--measure-file", path.string()});
  EXPECT_EQ(r.code, cdlab::cli::kExitNumerical);
  EXPECT_NE(r.err.find("k=2"), std::string::npos) << r.err;
}

TEST(Cli, ConfigFileAndOverrides) {
  const auto cfg = scratch("algebra.json");
  std::ofstream(cfg) << R"({"experiment": "algebra", "k_values": [8, 32], "timing": false})";
  const auto r = invoke({"algebra", "--config", cfg.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(quantity_at(r.out, 32), 0.0625, 1e-9) << r.out;

  const auto over = invoke({"algebra", "--config", cfg.string(), "--k", "2,4,8"});
  ASSERT_EQ(over.code, 0) << over.err;
  EXPECT_FALSE(std::isnan(quantity_at(over.out, 2)));
  EXPECT_TRUE(std::isnan(quantity_at(over.out, 32)));

  // A config written for another experiment is rejected.
  EXPECT_EQ(invoke({"szego", "--config", cfg.string()}).code, 2);
}

TEST(Cli, RegionsFromFlags) {
  const auto r = invoke({"offdiag", "--k", "8,16,32", "--region-kind", "interval", "--measure", "interval",
                         "--region-a=-0.9,-0.3", "--region-b=0.3,0.9", "--no-timing"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("# fit quantity slope="), std::string::npos);
}
