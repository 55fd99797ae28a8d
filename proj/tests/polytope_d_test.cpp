#include <gtest/gtest.h>

#include <random>

#include "thmc/design.hpp"
#include "thmc/exact_lp.hpp"
#include "thmc/polytope_d.hpp"

using namespace thmc;

TEST(DegreeBalance, Columns) {
  for (int T = 4; T <= 8; ++T)
    for (const auto& c : distinct_columns(Model::D, 3, T)) {
      auto b = check_degree_balance(c, T);
      EXPECT_EQ(b.k, 1);
      EXPECT_TRUE(b.ok);
    }
}

TEST(DegreeBalance, SumsOfColumns) {
  std::mt19937_64 rng(9);
  for (int T = 4; T <= 8; ++T) {
    auto cols = distinct_columns(Model::D, 3, T);
    std::uniform_int_distribution<std::size_t> pick(0, cols.size() - 1);
    for (int k = 1; k <= 4; ++k)
      for (int s = 0; s < 20; ++s) {
        IntVec x(6, 0);
        for (int i = 0; i < k; ++i) x = add(x, cols[pick(rng)]);
        auto b = check_degree_balance(x, T);
        EXPECT_EQ(b.k, k);
        EXPECT_TRUE(b.ok);
      }
  }
}

TEST(DegreeBalance, Violator) {
  // Three edges out of state 1 and nothing back: imbalance 3 with k = 1.
  const int T = 4;
  IntVec x{2, 1, 0, 0, 0, 0};
  auto b = check_degree_balance(x, T);
  EXPECT_EQ(b.k, 1);
  EXPECT_FALSE(b.ok);
  EXPECT_FALSE(in_convex_hull(distinct_columns(Model::D, 3, T), x));
}

TEST(IntegerPoints, SmallT) {
  for (int T = 4; T <= 6; ++T) {
    auto r = integer_points_report(T);
    EXPECT_TRUE(r.equal()) << T;
    EXPECT_EQ(r.in_polytope, r.columns);
  }
}

TEST(Dilation, NoCounterexamples) {
  for (int T = 4; T <= 5; ++T)
    for (int k = 1; k <= 2; ++k) {
      auto r = verify_dilation_slice(T, k, 60, 3);
      EXPECT_TRUE(r.ok());
      EXPECT_GT(r.inside, 0u);
      EXPECT_LT(r.inside, 60u);
    }
}

TEST(Dilation, SumOfTwoColumnsInTwoP) {
  auto cols = distinct_columns(Model::D, 3, 4);
  std::vector<IntVec> twice;
  for (auto c : cols) {
    for (auto& v : c) v *= 2;
    twice.push_back(c);
  }
  for (std::size_t a = 0; a < cols.size(); a += 3)
    for (std::size_t b = 0; b < cols.size(); b += 5) EXPECT_TRUE(in_convex_hull(twice, add(cols[a], cols[b])));
}

TEST(MiddleClass, ReferenceGraphDecomposes) {
  auto x = graph_of_word(parse_word("1212121231231"), 3);
  auto c = classify_Gmn(x);
  EXPECT_EQ(c.m, 3);
  EXPECT_EQ(c.n, 2);
  auto d = middle_class_decomposition(x);
  ASSERT_TRUE(d);
  // The two halves are graphs of length-13 words.
  EXPECT_EQ(d->y, graph_of_word(parse_word("1212121212121"), 3));
  EXPECT_EQ(d->z, graph_of_word(parse_word("1231231231231"), 3));
}

TEST(MiddleClass, AllDecomposeForLargeT) {
  for (int T = 13; T <= 20; ++T) {
    auto r = verify_middle_class_decompositions(T);
    EXPECT_GT(r.checked, 0u);
    EXPECT_EQ(r.failures, 0u);
  }
}

TEST(Vertices, ClassificationT13) {
  auto c = classify_vertices(13, true);
  EXPECT_EQ(c.vertices.size(), 77u);
  EXPECT_EQ(c.lp_vertex_count, 77u);
  EXPECT_EQ(c.middle_count, 0u);
  EXPECT_EQ(c.outside_script_G, 0u);
}

TEST(Vertices, TwoCycleTypesNeverVertices) {
  for (int T = 4; T <= 10; ++T) {
    auto c = classify_vertices(T);
    EXPECT_EQ(c.outside_script_G, 0u) << T;
  }
}

TEST(Stabilization, Repeats) {
  auto r = fvector_stabilization_report(4, 8);
  EXPECT_TRUE(r.repeats.empty());
  EXPECT_EQ(r.rows.size(), 5u);
}
