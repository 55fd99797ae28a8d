#include <gtest/gtest.h>

#include "thmc/design.hpp"
#include "thmc/exact_lp.hpp"

using namespace thmc;

TEST(LinearSystem, FeasibleAndInfeasible) {
  LinearSystem s(2);
  s.add(std::vector<std::int64_t>{1, 1}, Sense::eq, 3);
  s.add(std::vector<std::int64_t>{1, -1}, Sense::ge, 1);
  auto x = s.solve();
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0] + (*x)[1], Rational(3));
  EXPECT_GE((*x)[0] - (*x)[1], Rational(1));

  LinearSystem t(2);
  t.add(std::vector<std::int64_t>{1, 1}, Sense::le, 1);
  t.add(std::vector<std::int64_t>{1, 1}, Sense::ge, 2);
  EXPECT_FALSE(t.solve());
}

TEST(LinearSystem, FreeVariables) {
  LinearSystem s(1);
  s.add(std::vector<std::int64_t>{1}, Sense::eq, -2);
  EXPECT_FALSE(s.solve());
  s.set_free(0);
  auto x = s.solve();
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], Rational(-2));
}

TEST(LinearSystem, DegenerateCyclingExample) {
  // A classic degenerate system; Bland's rule must terminate.
  LinearSystem s(4);
  s.add(std::vector<std::int64_t>{1, -11, -5, 18}, Sense::le, 0);
  s.add(std::vector<std::int64_t>{1, -3, -1, 2}, Sense::le, 0);
  s.add(std::vector<std::int64_t>{1, 0, 0, 0}, Sense::eq, 1);
  EXPECT_TRUE(s.solve());
}

TEST(Hull, ConvexAndConic) {
  std::vector<IntVec> sq{{0, 0}, {2, 0}, {0, 2}, {2, 2}};
  EXPECT_TRUE(in_convex_hull(sq, IntVec{1, 1}));
  EXPECT_FALSE(in_convex_hull(sq, IntVec{3, 1}));
  std::vector<Rational> half{Rational(1, 2), Rational(3, 2)};
  EXPECT_TRUE(in_convex_hull(sq, half));
  std::vector<IntVec> rays{{1, 0}, {1, 2}};
  EXPECT_TRUE(in_cone(rays, IntVec{3, 2}));
  EXPECT_FALSE(in_cone(rays, IntVec{0, 1}));
  auto lam = conic_combination(rays, to_rational(IntVec{3, 2}));
  ASSERT_TRUE(lam);
  EXPECT_EQ((*lam)[0], Rational(2));
  EXPECT_EQ((*lam)[1], Rational(1));
}

TEST(Hull, ColumnMidpointExample) {
  // (0,1,0,1,1,1) is the midpoint of two other columns for T = 5.
  auto cols = distinct_columns(Model::D, 3, 5);
  IntVec x{0, 1, 0, 1, 1, 1}, a{0, 2, 0, 0, 2, 0}, b{0, 0, 0, 2, 0, 2};
  EXPECT_TRUE(std::count(cols.begin(), cols.end(), x));
  EXPECT_TRUE(std::count(cols.begin(), cols.end(), a));
  EXPECT_TRUE(std::count(cols.begin(), cols.end(), b));
  EXPECT_EQ(add(a, b), add(x, x));
  std::vector<IntVec> others;
  for (const auto& c : cols)
    if (c != x) others.push_back(c);
  EXPECT_TRUE(in_convex_hull(others, x));
}
