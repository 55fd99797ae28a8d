#include <gtest/gtest.h>

#include "thmc/error.hpp"
#include "thmc/suite.hpp"

using namespace thmc;

TEST(Suite, TwelveCriteria) {
  EXPECT_EQ(criteria().size(), 12u);
  EXPECT_THROW(run_criterion("nothing", {}), Error);
}

TEST(Suite, FilterAndJson) {
  SuiteOptions o;
  o.only = {"witnesses", "euler"};
  auto r = run_suite(o);
  ASSERT_EQ(r.results.size(), 2u);
  EXPECT_TRUE(r.passed());
  auto j = r.to_json();
  EXPECT_EQ(j["criteria"].size(), 2u);
  EXPECT_EQ(j["passed"], true);
}

TEST(Suite, DesignReportsMisprintedColumns) {
  auto r = run_criterion("design", {});
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.data["a"]["ok"], true);
  EXPECT_EQ(r.data["b"]["ok"], true);
  for (const char* m : {"c", "d"}) {
    EXPECT_EQ(r.data[m]["mismatched_columns"].size(), 11u);
    EXPECT_EQ(r.data[m]["same_column_multiset"], true);
  }
}

TEST(Suite, DeterministicAcrossRuns) {
  SuiteOptions o;
  o.only = {"lattice"};
  o.seed = 7;
  auto a = run_suite(o);
  o.jobs = 4;
  auto b = run_suite(o);
  EXPECT_EQ(a.results[0].detail, b.results[0].detail);
}

TEST(Suite, TableNegativeControl) {
  fixtures::TableRow wrong{4, 20, {20, 69, 90, 51, 13}};
  EXPECT_FALSE(check_table_row(Model::D, wrong).matches);
  fixtures::TableRow right{4, 20, {20, 69, 90, 51, 12}};
  EXPECT_TRUE(check_table_row(Model::D, right).matches);
}

TEST(Suite, InvariantFactorRoutesAgree) {
  for (int T = 4; T <= 7; ++T) {
    auto full = design_invariant_factors(Model::B, 3, T, 100000);
    auto lat = design_invariant_factors(Model::B, 3, T, 1);
    EXPECT_TRUE(full.full_matrix);
    EXPECT_FALSE(lat.full_matrix);
    EXPECT_EQ(full.diagonal, lat.diagonal);
  }
}
