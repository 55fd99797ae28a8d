#include <gtest/gtest.h>

#include "thmc/design.hpp"
#include "thmc/error.hpp"
#include "thmc/exact_lp.hpp"
#include "thmc/hilbert.hpp"
#include "thmc/lattice.hpp"

using namespace thmc;

TEST(HilbertOf, TwoDimensionalCone) {
  std::vector<IntVec> gens{{1, 0}, {0, 1}, {1, 2}};
  auto hb = hilbert_basis_of(gens);
  EXPECT_EQ(hb, (std::vector<IntVec>{{0, 1}, {1, 0}}));
  std::vector<IntVec> narrow{{1, 0}, {1, 3}, {1, 1}};
  auto h2 = hilbert_basis_of(narrow);
  EXPECT_EQ(h2, (std::vector<IntVec>{{1, 0}, {1, 1}, {1, 2}, {1, 3}}));
}

TEST(HilbertOf, SublatticeMatters) {
  // (1,0) and (1,2) span the lattice of even second coordinate; (1,1) is not in it.
  std::vector<IntVec> gens{{1, 0}, {1, 2}};
  EXPECT_EQ(hilbert_basis_of(gens), gens);
}

TEST(HilbertOf, ClassicNonNormal) {
  // Degree-3 Veronese-like: (3,0),(2,1),(0,3) inside x+y=3; (1,2) is in cone and lattice but not semigroup.
  std::vector<IntVec> gens{{3, 0}, {2, 1}, {0, 3}};
  auto hb = hilbert_basis_of(gens);
  EXPECT_EQ(hb, (std::vector<IntVec>{{0, 3}, {1, 2}, {2, 1}, {3, 0}}));
}

TEST(Hilbert, ModelDSmallT) {
  EXPECT_EQ(hilbert_basis(Model::D, 3, 4).elements.size(), 20u);
  EXPECT_EQ(hilbert_basis(Model::D, 3, 5).elements.size(), 30u);
  EXPECT_TRUE(hilbert_basis(Model::D, 3, 6).normal);
  EXPECT_EQ(hilbert_basis(Model::C, 3, 4).elements.size(), 24u);
}

TEST(Hilbert, ElementsAreInConeAndLattice) {
  auto r = hilbert_basis(Model::C, 3, 5);
  auto cols = distinct_columns(Model::C, 3, 5);
  auto L = Lattice::from_generators(cols);
  for (const auto& h : r.elements) {
    EXPECT_TRUE(L.contains(h));
    EXPECT_TRUE(in_cone(cols, h));
  }
}

TEST(Hilbert, MatchesOracle) {
  for (int T = 4; T <= 5; ++T) {
    EXPECT_EQ(hilbert_basis(Model::D, 3, T).elements, hilbert_basis_bruteforce_oracle(Model::D, 3, T, 3));
  }
  EXPECT_EQ(hilbert_basis(Model::C, 3, 4).elements, hilbert_basis_bruteforce_oracle(Model::C, 3, 4, 3));
}

TEST(Hilbert, NonNormalSmallModels) {
  auto b = hilbert_basis(Model::B, 2, 4);
  EXPECT_FALSE(b.normal);
  EXPECT_EQ(b.elements.size(), 14u);
  EXPECT_EQ(hilbert_basis(Model::B, 2, 4).elements, hilbert_basis_bruteforce_oracle(Model::B, 2, 4, 3));
  EXPECT_FALSE(check_normality(Model::B, 2, 5));
}

TEST(Hilbert, RangeEnforced) {
  EXPECT_THROW(hilbert_basis(Model::D, 3, 40), Error);
  HilbertOptions o;
  o.range = HilbertRange{4, 4};
  EXPECT_THROW(hilbert_basis(Model::D, 3, 5, o), Error);
  EXPECT_NO_THROW(hilbert_basis(Model::D, 3, 4, o));
}

TEST(Witness, ModelA) {
  for (int T = 4; T <= 6; ++T) {
    auto w = nonnormality_witness(Model::A, 3, T);
    EXPECT_TRUE(w.verified());
    EXPECT_EQ(hilbert_degree(Model::A, T, w.h), 2);
    // Independent check of the combinations.
    std::vector<Rational> sum(w.h.size(), Rational(0));
    for (const auto& [word, coef] : w.rational_combination) {
      auto c = column_of_word(Model::A, 3, T, word);
      for (std::size_t i = 0; i < c.size(); ++i) sum[i] += coef * c[i];
    }
    for (std::size_t i = 0; i < sum.size(); ++i) EXPECT_EQ(sum[i], Rational(w.h[i]));
    IntVec lat(w.h.size(), 0);
    for (const auto& [word, coef] : w.lattice_combination) {
      auto c = column_of_word(Model::A, 3, T, word);
      for (std::size_t i = 0; i < c.size(); ++i) lat[i] += coef * c[i];
    }
    EXPECT_EQ(lat, w.h);
    EXPECT_FALSE(in_semigroup(Model::A, 3, T, w.h));
  }
}

TEST(Witness, ModelB) {
  for (int S = 2; S <= 3; ++S)
    for (int T = 3; T <= 6; ++T) {
      auto w = nonnormality_witness(Model::B, S, T);
      EXPECT_TRUE(w.verified());
      EXPECT_TRUE(w.in_cone);
      EXPECT_TRUE(w.in_lattice);
      EXPECT_TRUE(w.not_in_semigroup);
    }
}

TEST(Semigroup, ColumnsAndSums) {
  auto cols = distinct_columns(Model::D, 3, 5);
  EXPECT_TRUE(in_semigroup(Model::D, 3, 5, cols[3]));
  EXPECT_TRUE(in_semigroup(Model::D, 3, 5, add(cols[1], cols[7])));
  EXPECT_FALSE(in_semigroup(Model::D, 3, 5, IntVec{4, 0, 0, 0, 0, 0}));
}

TEST(Export, CsvAndJson) {
  auto r = hilbert_basis(Model::D, 3, 4);
  auto csv = vectors_to_csv(r.elements);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 20);
  auto j = hilbert_to_json(r);
  EXPECT_EQ(j["count"], 20);
  EXPECT_EQ(j["normal"], true);
}
