#include <gtest/gtest.h>

#include <random>

#include "thmc/design.hpp"
#include "thmc/double_description.hpp"
#include "thmc/error.hpp"
#include "thmc/exact_lp.hpp"
#include "thmc/polyhedra.hpp"

using namespace thmc;

TEST(Cone, OrthantFacets) {
  std::vector<IntVec> e{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  auto h = cone_facets(e);
  EXPECT_EQ(h.inequalities, (std::vector<IntVec>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  EXPECT_TRUE(h.equations.empty());
}

TEST(Cone, AllZeroIsDegenerate) {
  std::vector<IntVec> z{{0, 0}, {0, 0}};
  EXPECT_THROW(cone_facets(z), Error);
}

TEST(Cone, IndependentOfInputOrder) {
  auto cols = distinct_columns(Model::D, 3, 5);
  auto a = cone_facets(cols);
  std::mt19937_64 rng(2);
  std::shuffle(cols.begin(), cols.end(), rng);
  cols.push_back(cols.front());
  EXPECT_EQ(cone_facets(cols).inequalities, a.inequalities);
}

TEST(Cone, ModelDT4) {
  auto cols = distinct_columns(Model::D, 3, 4);
  auto h = cone_facets(cols);
  EXPECT_EQ(h.inequalities.size(), 12u);
  EXPECT_EQ(nonnegativity_facets(h.inequalities, cols).size(), 6u);
  EXPECT_TRUE(std::count(h.inequalities.begin(), h.inequalities.end(), IntVec{2, -1, -1, -1, 2, 2}));
}

TEST(Cone, FacetsAreValidAndIrredundant) {
  // Every generator satisfies every facet; each facet has a witness outside
  // the cone that satisfies all other facets (checked by LP).
  for (auto [m, T] : std::vector<std::pair<Model, int>>{{Model::D, 5}, {Model::C, 4}}) {
    auto cols = distinct_columns(m, 3, T);
    auto cone = analyze_cone(cols);
    for (const auto& n : cone.hrep.inequalities) {
      EXPECT_EQ(gcd_of(n), 1);
      for (const auto& g : cols) EXPECT_GE(dot(n, g), 0);
    }
    for (const auto& e : cone.hrep.equations)
      for (const auto& g : cols) EXPECT_EQ(dot(e, g), 0);
    for (std::size_t f = 0; f < cone.hrep.inequalities.size(); ++f) {
      LinearSystem s(cols.front().size());
      for (std::size_t v = 0; v < s.variables(); ++v) s.set_free(v);
      for (std::size_t g = 0; g < cone.hrep.inequalities.size(); ++g)
        if (g != f) s.add(cone.hrep.inequalities[g], Sense::ge, 0);
      for (const auto& e : cone.hrep.equations) s.add(e, Sense::eq, 0);
      s.add(cone.hrep.inequalities[f], Sense::le, -1);
      EXPECT_TRUE(s.solve()) << "facet " << f << " is redundant";
    }
  }
}

TEST(FVector, Simplex) {
  std::vector<IntVec> tri{{0, 0}, {1, 0}, {0, 1}};
  auto f = f_vector(tri);
  EXPECT_EQ(f.dimension, 2);
  EXPECT_EQ(f.f, (std::vector<std::int64_t>{3, 3}));
  EXPECT_TRUE(f.satisfies_euler());
}

TEST(FVector, CubeAndOctahedron) {
  std::vector<IntVec> cube;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) cube.push_back({a, b, c});
  EXPECT_EQ(f_vector(cube).f, (std::vector<std::int64_t>{8, 12, 6}));
  std::vector<IntVec> oct{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  EXPECT_EQ(f_vector(oct).f, (std::vector<std::int64_t>{6, 12, 8}));
  // 4-cube embedded in 5 dimensions with an interior point.
  std::vector<IntVec> hc;
  for (int m = 0; m < 16; ++m) hc.push_back({m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1, 7});
  hc.push_back({0, 0, 0, 0, 7});
  EXPECT_EQ(f_vector(hc).f, (std::vector<std::int64_t>{16, 32, 24, 8}));
}

TEST(FVector, ModelTables) {
  EXPECT_EQ(f_vector(distinct_columns(Model::D, 3, 4)).f, (std::vector<std::int64_t>{20, 69, 90, 51, 12}));
  EXPECT_EQ(f_vector(distinct_columns(Model::C, 3, 4)).f,
            (std::vector<std::int64_t>{24, 156, 434, 606, 444, 162, 24}));
}

TEST(Vertices, LpAgreesWithCone) {
  for (int T = 4; T <= 8; ++T) {
    auto cols = distinct_columns(Model::D, 3, T);
    auto v = polytope_vertices(cols);
    auto cone = analyze_cone(cols);
    std::vector<IntVec> ext;
    for (auto e : cone.extreme) ext.push_back(cone.generators[e]);
    std::sort(ext.begin(), ext.end());
    auto pts = v.points;
    std::sort(pts.begin(), pts.end());
    EXPECT_EQ(pts, ext);
  }
  std::vector<IntVec> one{{3, 4}};
  EXPECT_EQ(polytope_vertices(one).points, one);
}

TEST(Hyperplanes, CompareDetectsDifferences) {
  auto cols = distinct_columns(Model::D, 3, 4);
  auto h = cone_facets(cols);
  auto nonneg = nonnegativity_facets(h.inequalities, cols);
  std::vector<IntVec> listed;
  for (const auto& n : h.inequalities)
    if (!std::count(nonneg.begin(), nonneg.end(), n)) listed.push_back(n);
  EXPECT_TRUE(compare_hyperplanes(h.inequalities, listed, cols, nonneg).equal());
  auto scaled = listed;
  for (auto& v : scaled[0]) v *= 3;
  EXPECT_TRUE(compare_hyperplanes(h.inequalities, scaled, cols, nonneg).equal());
  auto fewer = listed;
  fewer.pop_back();
  EXPECT_EQ(compare_hyperplanes(h.inequalities, fewer, cols, nonneg).missing.size(), 1u);
  auto wrong = listed;
  wrong[0] = IntVec{1, 1, 1, 1, 1, 1};
  auto cmp = compare_hyperplanes(h.inequalities, wrong, cols, nonneg);
  EXPECT_FALSE(cmp.equal());
  EXPECT_EQ(cmp.unexpected.size(), 1u);
}

TEST(DoubleDescription, RequiresFullDimension) {
  std::vector<IntVec> flat{{1, 0, 0}, {0, 1, 0}};
  EXPECT_THROW(double_description(flat), Error);
  EXPECT_EQ(vector_rank(flat), 2u);
}

TEST(Export, JsonAndColumns) {
  auto h = cone_facets(std::vector<IntVec>{{1, 0}, {1, 1}});
  EXPECT_EQ(hrep_to_json(h)["inequalities"].size(), 2u);
  EXPECT_EQ(normals_as_columns(h.inequalities), "0 1\n1 -1\n");
}
