#include <gtest/gtest.h>

#include <random>
#include <set>

#include "thmc/design.hpp"
#include "thmc/error.hpp"
#include "thmc/lattice.hpp"

using namespace thmc;

TEST(Lattice, SimpleSublattice) {
  std::vector<IntVec> gens{{2, 0}, {0, 3}};
  auto L = Lattice::from_generators(gens);
  EXPECT_EQ(L.rank(), 2u);
  EXPECT_TRUE(L.contains(IntVec{4, -3}));
  EXPECT_FALSE(L.contains(IntVec{1, 3}));
  EXPECT_FALSE(L.contains(IntVec{2, 1}));
  auto z = L.coordinates(IntVec{4, -3});
  EXPECT_EQ(L.from_coordinates(z), (IntVec{4, -3}));
}

TEST(Lattice, LowerRankSpan) {
  std::vector<IntVec> gens{{1, 1, 0}, {0, 2, 2}};
  auto L = Lattice::from_generators(gens);
  EXPECT_EQ(L.rank(), 2u);
  EXPECT_TRUE(L.in_span(IntVec{1, 3, 2}));
  EXPECT_TRUE(L.contains(IntVec{1, 3, 2}));
  EXPECT_FALSE(L.in_span(IntVec{1, 0, 0}));
  auto eq = L.equations();
  ASSERT_EQ(eq.size(), 1u);
  for (const auto& g : gens) EXPECT_EQ(dot(eq[0], g), 0);
}

TEST(Lattice, MembershipAgainstBruteForce) {
  // Oracle: small integer combinations of the generators.
  std::vector<IntVec> gens{{3, 1, 0}, {1, 2, 1}, {0, 1, 3}, {2, 0, 2}};
  auto L = Lattice::from_generators(gens);
  std::set<IntVec> reach;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c)
        for (int d = -3; d <= 3; ++d) {
          IntVec v(3);
          for (int i = 0; i < 3; ++i)
            v[static_cast<std::size_t>(i)] = a * gens[0][static_cast<std::size_t>(i)] + b * gens[1][static_cast<std::size_t>(i)] +
                                             c * gens[2][static_cast<std::size_t>(i)] + d * gens[3][static_cast<std::size_t>(i)];
          reach.insert(v);
        }
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y)
      for (int z = -2; z <= 2; ++z) {
        IntVec v{x, y, z};
        EXPECT_EQ(L.contains(v), reach.count(v) > 0) << x << y << z;
      }
}

TEST(Lattice, ResidueLemmaModelsBandD) {
  std::mt19937_64 rng(3);
  for (int T = 4; T <= 7; ++T) {
    for (auto [m, S] : std::vector<std::pair<Model, int>>{{Model::B, 2}, {Model::B, 3}, {Model::D, 3}, {Model::D, 4}}) {
      auto L = Lattice::of_design(m, S, T);
      auto A = build_design_matrix(m, S, T);
      std::vector<IntVec> cols;
      for (std::size_t j = 0; j < A.column_count(); ++j) cols.emplace_back(A.column(j).begin(), A.column(j).end());
      auto snf = smith_normal_form(IntMat::from_columns(cols));
      std::uniform_int_distribution<std::int64_t> d(-10, 10);
      for (int s = 0; s < 100; ++s) {
        IntVec y(row_count(m, S));
        for (auto& v : y) v = d(rng);
        if (s % 2) y[0] -= ((sum(y) % (T - 1)) + (T - 1)) % (T - 1);
        EXPECT_EQ(L.contains(y), residue_test(y, T));
        EXPECT_EQ(lattice_membership(snf, y), residue_test(y, T));
      }
    }
  }
}

TEST(Lattice, ModelCHasRankDeficiency) {
  // Initial rows plus transitions obey one linear relation per state balance; the span is not full.
  auto L = Lattice::of_design(Model::C, 3, 4);
  EXPECT_LT(L.rank(), row_count(Model::C, 3));
  for (const auto& c : distinct_columns(Model::C, 3, 4)) EXPECT_TRUE(L.contains(c));
}

TEST(Lattice, KernelBasis) {
  auto A = IntMat::from_rows({{1, 1, 1, 1}, {0, 1, 2, 3}});
  auto K = kernel_lattice_basis(A);
  EXPECT_EQ(K.size(), 2u);
  for (const auto& k : K) {
    auto r = A.multiply(k);
    for (const auto& x : r) EXPECT_EQ(x, 0);
  }
}

TEST(Lattice, PullBackKeepsSign) {
  std::vector<IntVec> gens{{1, 1, 0}, {1, 0, 1}};
  auto L = Lattice::from_generators(gens);
  auto c0 = L.coordinates(gens[0]);
  auto c1 = L.coordinates(gens[1]);
  // A functional positive on the first generator and zero on the second.
  IntVec n{c1[1], -c1[0]};
  if (dot(n, c0) < 0)
    for (auto& v : n) v = -v;
  auto back = L.pull_back_functional(n);
  EXPECT_GT(dot(back, gens[0]), 0);
  EXPECT_EQ(dot(back, gens[1]), 0);
}

TEST(Lattice, InverseUnimodular) {
  auto U = IntMat::from_rows({{2, 1}, {1, 1}});
  EXPECT_EQ(U * inverse_unimodular(U), IntMat::identity(2));
  EXPECT_THROW(inverse_unimodular(IntMat::from_rows({{2, 0}, {0, 1}})), Error);
}
