#include <gtest/gtest.h>

#include <string>

#include "riesz/serialize.hpp"
#include "riesz/suites.hpp"

using namespace riesz;

TEST(Suites, RecordKeepsSmallestCounterexample) {
  PropertyResult p("p", "claim");
  p.record(true, 1, [] { return std::string("unused"); });
  EXPECT_TRUE(p.passed);
  p.record(false, 5, [] { return std::string("five"); });
  p.record(false, 2, [] { return std::string("two"); });
  p.record(false, 3, [] { return std::string("three"); });
  EXPECT_FALSE(p.passed);
  EXPECT_EQ(p.checks, 4U);
  EXPECT_EQ(p.counterexample, "two");
}

TEST(Suites, UnknownSuite) { EXPECT_THROW(run_suite("nosuch", {}), UnknownSuite); }

class EverySuite : public ::testing::TestWithParam<std::string> {};

TEST_P(EverySuite, PassesOnAnotherSeedAndIsDeterministic) {
  const SuiteConfig cfg{1234, 12, 5};
  const SuiteReport a = run_suite(GetParam(), cfg);
  EXPECT_TRUE(a.passed());
  for (const auto& r : a.results) {
    EXPECT_GT(r.checks, 0U) << r.name;
    EXPECT_FALSE(r.counterexample.has_value()) << *r.counterexample;
  }
  const SuiteReport b = run_suite(GetParam(), cfg);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  const SuiteReport c = run_suite(GetParam(), SuiteConfig{1235, 12, 5});
  EXPECT_TRUE(c.passed());
}

INSTANTIATE_TEST_SUITE_P(Registry, EverySuite,
                         ::testing::Values("adjoints", "interval-oracle", "colimit-duality", "limit-duality",
                                           "pm-scenarios", "disjointify", "sum-product-duality",
                                           "finite-carrier-iso", "functoriality"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (auto& ch : s) {
                             if (ch == '-') ch = '_';
                           }
                           return s;
                         });

TEST(Suites, ReportJsonShape) {
  const SuiteReport r = run_suite("finite-carrier-iso", {42, 0, 0});
  const Json j = to_json(r);
  EXPECT_EQ(j["command"], "verify");
  EXPECT_EQ(j["suite"], "finite-carrier-iso");
  EXPECT_EQ(j["seed"], 42);
  EXPECT_TRUE(j["depth"].is_null());
  EXPECT_EQ(j["results"].size(), 3U);
  EXPECT_EQ(j["results"][0]["status"], "pass");
  EXPECT_FALSE(j["results"][0].contains("counterexample"));
  ASSERT_EQ(j["tables"].size(), 3U);
  EXPECT_EQ(j["tables"][2]["rows"].size(), 8U);
}

TEST(Serialize, Values) {
  EXPECT_EQ(to_json(FinVector{Scalar(3, 2), -1}).dump(), R"(["3/2","-1/1"])");
  EXPECT_EQ(to_json(Band(4, {0, 3})).dump(), "[1,4]");
  EXPECT_EQ(vector_from_json(to_json(FinVector{Scalar(-7, 3), 0})), (FinVector{Scalar(-7, 3), 0}));
  const DirectSystem inc = DirectSystem::standard_chain();
  EXPECT_EQ(to_json(embed(inc, 2, FinVector{1, 2})).dump(), R"({"level":2,"coords":["1/1","2/1"]})");
  Thread t = ones_thread(InverseSystem::standard_chain());
  verify_thread(t, 2);
  EXPECT_EQ(to_json(t).dump(), R"({"depth":2,"components":[["1/1"],["1/1","1/1"]],"rule":"ones"})");
}
