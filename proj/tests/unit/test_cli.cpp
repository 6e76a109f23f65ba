#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "covlab/io/json.hpp"
#include "covlab_cli/cli.hpp"

using covlab::io::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = covlab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(COVLAB_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, AnalyzeFullShift) {
  const auto r = run({"analyze", data("fullshift2.json"), "--depth", "3", "--orbit-depth", "3", "--window", "3",
                      "--tol", "1e-9", "--seed", "42"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("verdict"), "FREE");
  EXPECT_TRUE(j.at("probe").at("all_pass").get<bool>());
  EXPECT_EQ(j.at("config").at("seed"), 42);
}

TEST(Cli, AnalyzeTrap) {
  const auto r = run({"analyze", data("trap.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("verdict"), "NOT_FREE");
  EXPECT_TRUE(j.at("witness").at("all_pass").get<bool>());
  EXPECT_EQ(j.at("certificate").at("cylinder"), "0");
}

TEST(Cli, InvalidSpecs) {
  const auto r = run({"analyze", data("zero_column.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("shift not surjective: not a covering map"), std::string::npos);
  const auto m = run({"residuals", data("malformed.json")});
  EXPECT_EQ(m.code, 2);
  EXPECT_NE(m.err.find("malformed.json:3:"), std::string::npos);
  EXPECT_EQ(run({"analyze"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
}

TEST(Cli, Residuals) {
  const auto r = run({"residuals", data("fullshift2.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  for (const char* mode : {"psi", "psi_tilde"}) {
    for (const json& e : j.at("residuals").at(mode).at("entries")) EXPECT_LE(e.at("value").get<double>(), 1e-9);
  }
}

TEST(Cli, Witness) {
  const auto r = run({"witness", data("trap.json"), "1", "0", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json w = json::parse(r.out).at("witness");
  EXPECT_TRUE(w.at("commutant").at("pass").get<bool>());
  EXPECT_TRUE(w.at("entry").at("pass").get<bool>());
  EXPECT_TRUE(w.at("kernel").at("confirmed").get<bool>());

  const auto bad = run({"witness", data("fullshift2.json"), "1", "0", "0"});
  EXPECT_EQ(bad.code, 4);
  EXPECT_NE(bad.err.find("cylinder not inside equalizer"), std::string::npos);
}

TEST(Cli, OutputFile) {
  const std::string path = ::testing::TempDir() + "covlab_cli_output.json";
  const auto r = run({"analyze", data("trap.json"), "--output", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(json::parse(in).at("verdict"), "NOT_FREE");
}
