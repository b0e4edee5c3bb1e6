#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "riesz/cli.hpp"

using namespace riesz;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args, const char* env_seed = nullptr) {
  args.insert(args.begin(), "riesz-limits");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err, env_seed);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string data(const char* name) { return std::string(RIESZ_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, VerifyAdjoints) {
  const CliRun r = run({"verify", "adjoints", "--trials", "40", "--seed", "42"});
  EXPECT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["suite"], "adjoints");
  EXPECT_EQ(j["trials"], 40);
  EXPECT_EQ(j["status"], "pass");
}

TEST(Cli, VerifyIsDeterministic) {
  const CliRun a = run({"verify", "limit-duality", "--trials", "10", "--seed", "9"});
  const CliRun b = run({"verify", "limit-duality", "--trials", "10", "--seed", "9"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, EnvironmentSeedOverrides) {
  const CliRun a = run({"verify", "disjointify", "--trials", "5", "--seed", "1"}, "77");
  EXPECT_EQ(Json::parse(a.out)["seed"], 77);
  const CliRun bad = run({"verify", "disjointify"}, "seven");
  EXPECT_EQ(bad.code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"verify", "nosuch"}).code, 2);
  EXPECT_EQ(run({"demo", "nosuch"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"verify", "adjoints", "--trials", "0"}).code, 2);
  EXPECT_EQ(run({"verify", "adjoints", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"check", "/nonexistent/file.sys"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, TextFormat) {
  const CliRun r = run({"verify", "sum-product-duality", "--trials", "5", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS restriction-and-sum-mutually-inverse"), std::string::npos);
  EXPECT_NE(r.out.find("result: pass"), std::string::npos);
}

TEST(Cli, Demos) {
  for (const char* name : {"romega-pm", "c00-pm-gap", "lp-blocks", "c00-dual"}) {
    const CliRun r = run({"demo", name, "--depth", "8"});
    EXPECT_EQ(r.code, 0) << name << r.err;
    EXPECT_FALSE(r.out.empty()) << name;
  }
  const CliRun gap = run({"demo", "c00-pm-gap", "--depth", "8"});
  EXPECT_NE(gap.out.find("t_9 = (1,1,1,1,1,1,1,1,1)"), std::string::npos);
  EXPECT_NE(gap.out.find("8  9      9           1/1"), std::string::npos);
}

TEST(Cli, CheckGoldens) {
  for (const char* name : {"inclusion", "duplication", "restriction_gap"}) {
    const CliRun r = run({"check", data((std::string(name) + ".sys").c_str())});
    EXPECT_EQ(r.code, 0) << name;
    EXPECT_EQ(r.out, read_file(std::string(RIESZ_GOLDEN_DIR) + "/" + name + ".check.txt")) << name;
  }
}

TEST(Cli, CheckReportsParseErrorLine) {
  const std::string path = ::testing::TempDir() + "/malformed.sys";
  {
    std::ofstream f(path);
    f << "system direct\nlevels 2\ndim 1 1\ndim 2 2\nmap 1 2\n  1: 1 1\n  2: 1 x\n";
  }
  const CliRun r = run({"check", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 7"), std::string::npos) << r.err;
}

TEST(Cli, CheckClampsDepthToPrefix) {
  const CliRun r = run({"check", data("duplication.sys"), "--depth", "20"});
  EXPECT_NE(r.out.find("depth: 4"), std::string::npos);
}
