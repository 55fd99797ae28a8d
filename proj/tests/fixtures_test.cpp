#include <gtest/gtest.h>

#include "thmc/error.hpp"
#include "thmc/fixtures.hpp"

using namespace thmc;

TEST(Fixtures, AllEmbedded) {
  auto n = fixtures::names();
  EXPECT_EQ(n.size(), 8u);
  EXPECT_THROW(fixtures::text("nope"), Error);
}

TEST(Fixtures, DesignShapes) {
  EXPECT_EQ(fixtures::design(Model::A).rows.size(), 6u);
  EXPECT_EQ(fixtures::design(Model::B).words.size(), 16u);
  EXPECT_EQ(fixtures::design(Model::C).rows.size(), 9u);
  EXPECT_EQ(fixtures::design(Model::D).words.size(), 24u);
}

TEST(Fixtures, Tables) {
  auto d = fixtures::table(Model::D);
  ASSERT_EQ(d.size(), 12u);
  EXPECT_EQ(d.front().T, 4);
  EXPECT_EQ(d.back().hilbert, 468);
  EXPECT_EQ(d.back().f, (std::vector<std::int64_t>{63, 216, 257, 126, 24}));
  auto c = fixtures::table(Model::C);
  ASSERT_EQ(c.size(), 6u);
  EXPECT_EQ(c.back().hilbert, 162);
}

TEST(Fixtures, AppendixBlocks) {
  auto d = fixtures::appendix(Model::D);
  ASSERT_EQ(d.size(), 12u);
  EXPECT_EQ(d[0].normals.size(), 6u);
  EXPECT_EQ(d[0].normals[0], (IntVec{2, -1, -1, -1, 2, 2}));
  for (std::size_t i = 1; i < d.size(); ++i) EXPECT_EQ(d[i].normals.size(), 18u);
  auto c = fixtures::appendix_block(Model::C, 4);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->normals.size(), 16u);
  EXPECT_EQ(c->normals[0].size(), 9u);
  EXPECT_FALSE(fixtures::appendix_block(Model::D, 99));
}

TEST(Fixtures, ParseErrors) {
  EXPECT_THROW(fixtures::parse_table("4 x 1"), Error);
  EXPECT_THROW(fixtures::parse_appendix("T 4 2 2\n1 2\n"), Error);
  EXPECT_THROW(fixtures::parse_design("d 3 4\n1231\n12 1 2\n"), Error);
  auto rows = fixtures::parse_table("# comment\n\n4 20 20 69 90 51 12\n");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].f.size(), 5u);
}
