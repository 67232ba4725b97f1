#include <gtest/gtest.h>

#include "permlab/verify.hpp"

using namespace permlab;

namespace {

void expect_pass(const SuiteReport& r) {
  EXPECT_FALSE(r.checks.empty()) << r.suite;
  for (const auto& c : r.checks) {
    EXPECT_TRUE(c.passed) << r.suite << "/" << c.name << ": " << c.counterexample;
    EXPECT_GT(c.cases, 0u) << r.suite << "/" << c.name;
  }
  EXPECT_TRUE(r.passed());
}

}  // namespace

TEST(Suites, Algebra) { expect_pass(verify_algebra(7)); }
TEST(Suites, Toric) { expect_pass(verify_toric(6)); }
TEST(Suites, Bounds) { expect_pass(verify_bounds(7, PERMLAB_TEST_CACHE)); }
TEST(Suites, Graph) { expect_pass(verify_graph(7)); }

TEST(Suites, Dispatch) {
  EXPECT_EQ(suite_names(), (std::vector<std::string>{"algebra", "toric", "bounds", "graph"}));
  EXPECT_EQ(run_suite("toric", 4).suite, "toric");
  EXPECT_THROW(run_suite("nope"), parse_error);
}

TEST(Suites, ReportJson) {
  SuiteReport r{"x", {{"a", true, 3, ""}, {"b", false, 1, "[2 1]"}}};
  EXPECT_FALSE(r.passed());
  auto j = r.to_json();
  EXPECT_EQ(j["passed"], false);
  EXPECT_FALSE(j["checks"][0].contains("counterexample"));
  EXPECT_EQ(j["checks"][1]["counterexample"], "[2 1]");
}

TEST(EulerPhi, SmallValues) {
  const int expected[] = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
  for (int m = 1; m <= 12; ++m) EXPECT_EQ(euler_phi(m), expected[m]) << m;
}
