#include <gtest/gtest.h>

#include "thmc/error.hpp"
#include "thmc/pivot_paths.hpp"

using namespace thmc;

TEST(PivotPaths, ReferenceExamplesEvenT) {
  auto p1 = pivot_paths(3, 2, 1, 3, 6, PivotKind::type1);
  EXPECT_EQ(format_word(p1.P, 3), "212123");
  EXPECT_EQ(format_word(p1.Q, 3), "232121");
  auto p2 = pivot_paths(3, 2, 1, 3, 6, PivotKind::type2);
  EXPECT_EQ(format_word(p2.P, 3), "321212");
  EXPECT_EQ(format_word(p2.Q, 3), "312121");
}

TEST(PivotPaths, ReferenceExamplesOddT) {
  auto p1 = pivot_paths(3, 2, 1, 3, 7, PivotKind::type1);
  EXPECT_EQ(format_word(p1.P, 3), "2312123");
  EXPECT_EQ(format_word(p1.Q, 3), "2323121");
  auto p2 = pivot_paths(3, 2, 1, 3, 7, PivotKind::type2);
  EXPECT_EQ(format_word(p2.P, 3), "3231212");
  EXPECT_EQ(format_word(p2.Q, 3), "3123121");
}

TEST(PivotPaths, DifferencePatternAllTriples) {
  for (int S = 3; S <= 5; ++S)
    for (int T = 4; T <= 11; ++T)
      for (int i = 1; i <= S; ++i)
        for (int j = 1; j <= S; ++j)
          for (int k = 1; k <= S; ++k) {
            if (i == j || j == k || i == k) continue;
            for (PivotKind kind : {PivotKind::type1, PivotKind::type2}) {
              auto p = pivot_paths(S, i, j, k, T, kind);
              EXPECT_EQ(p.P.length(), T);
              EXPECT_EQ(p.Q.length(), T);
              EXPECT_FALSE(p.P.has_self_loop());
              EXPECT_FALSE(p.Q.has_self_loop());
              auto v = pivot_difference(p, S, T);
              IntVec expect(static_cast<std::size_t>(S * (S - 1)), 0);
              expect[transition_row(Model::D, S, p.plus[0], p.plus[1])] = 1;
              expect[transition_row(Model::D, S, p.minus[0], p.minus[1])] = -1;
              EXPECT_EQ(v, expect);
              if (kind == PivotKind::type1) {
                EXPECT_EQ(p.plus, (std::array<int, 2>{j, i}));
                EXPECT_EQ(p.minus, (std::array<int, 2>{k, i}));
              } else {
                EXPECT_EQ(p.plus, (std::array<int, 2>{k, i}));
                EXPECT_EQ(p.minus, (std::array<int, 2>{k, j}));
              }
            }
          }
}

TEST(PivotPaths, CompositionReachesEveryTransition) {
  for (int S = 3; S <= 5; ++S)
    for (int T = 4; T <= 9; ++T)
      for (int i = 1; i <= S; ++i)
        for (int j = 1; j <= S; ++j) {
          if (i == j || (i == 1 && j == 2)) continue;
          IntVec total(static_cast<std::size_t>(S * (S - 1)), 0);
          for (const auto& p : pivot_composition(S, i, j, T)) total = add(total, pivot_difference(p, S, T));
          IntVec expect(total.size(), 0);
          expect[transition_row(Model::D, S, 1, 2)] = 1;
          expect[transition_row(Model::D, S, i, j)] = -1;
          EXPECT_EQ(total, expect) << S << T << i << j;
        }
}

TEST(PivotPaths, InvalidIndices) {
  EXPECT_THROW(pivot_paths(3, 1, 1, 2, 6, PivotKind::type1), Error);
  EXPECT_THROW(pivot_paths(3, 1, 2, 4, 6, PivotKind::type1), Error);
  EXPECT_THROW(pivot_paths(3, 1, 2, 3, 3, PivotKind::type1), Error);
  EXPECT_THROW(pivot_pair_by_transitions(3, 1, 2, 3, 1, 6), Error);
}
