#include <gtest/gtest.h>

#include <map>
#include <set>

#include "thmc/design.hpp"
#include "thmc/error.hpp"
#include "thmc/fixtures.hpp"
#include "thmc/suite.hpp"

using namespace thmc;

class DesignFixtures : public ::testing::TestWithParam<Model> {};

TEST_P(DesignFixtures, MatchesReferenceEntrywise) {
  const auto f = fixtures::design(GetParam());
  const auto A = build_design_matrix(f.model, f.S, f.T);
  ASSERT_EQ(A.row_count(), f.rows.size());
  ASSERT_EQ(A.column_count(), f.words.size());
  for (std::size_t j = 0; j < A.column_count(); ++j) EXPECT_EQ(format_word(A.word(j), f.S), f.words[j]);
  for (std::size_t i = 0; i < A.row_count(); ++i) {
    EXPECT_EQ(A.rows()[i].str(), f.labels[i]);
    for (std::size_t j = 0; j < A.column_count(); ++j) EXPECT_EQ(A.entry(i, j), f.rows[i][j]) << i << "," << j;
  }
  EXPECT_TRUE(check_design_fixture(f).ok());
}

INSTANTIATE_TEST_SUITE_P(AB, DesignFixtures, ::testing::Values(Model::A, Model::B));

// The S=3 reference matrices put eleven columns under the wrong word.
// Everything else must agree exactly, and each misplaced reference column
// must be the transition count of some other loop-free word.
class MisprintedFixtures : public ::testing::TestWithParam<Model> {};

TEST_P(MisprintedFixtures, DifferOnlyInRelabeledColumns) {
  const auto f = fixtures::design(GetParam());
  const auto A = build_design_matrix(f.model, f.S, f.T);
  ASSERT_EQ(A.column_count(), f.words.size());
  const std::set<std::string> misplaced{"1231", "1232", "1312", "2131", "2132", "2312",
                                        "3123", "3131", "3132", "3212", "3213"};
  std::map<IntVec, std::set<std::string>> by_column;
  for (std::size_t j = 0; j < A.column_count(); ++j) {
    const auto c = A.column(j);
    by_column[IntVec(c.begin(), c.end())].insert(f.words[j]);
  }
  for (std::size_t j = 0; j < A.column_count(); ++j) {
    const Word w = parse_word(f.words[j]);
    IntVec ref(A.row_count());
    bool same = true;
    for (std::size_t i = 0; i < A.row_count(); ++i) {
      ref[i] = f.rows[i][j];
      // independent count from the word itself
      const auto& lab = A.rows()[i];
      std::int64_t want = 0;
      if (lab.kind == RowLabel::Kind::initial) {
        want = w[0] == lab.from;
      } else {
        for (std::size_t t = 0; t + 1 < static_cast<std::size_t>(w.length()); ++t) want += w[t] == lab.from && w[t + 1] == lab.to;
      }
      EXPECT_EQ(A.entry(i, j), want);
      same = same && ref[i] == want;
    }
    EXPECT_EQ(same, !misplaced.count(f.words[j])) << f.words[j];
    auto it = by_column.find(ref);
    ASSERT_NE(it, by_column.end()) << f.words[j];
    if (!same) {
      EXPECT_FALSE(it->second.count(f.words[j]));
    }
    if (f.model == Model::C) {
      EXPECT_EQ(it->second.begin()->front(), f.words[j].front());
    }
  }
  const auto c = check_design_fixture(f);
  EXPECT_FALSE(c.ok());
  EXPECT_TRUE(c.shape_ok);
  EXPECT_TRUE(c.same_column_multiset);
  EXPECT_EQ(std::set<std::string>(c.mismatched_columns.begin(), c.mismatched_columns.end()), misplaced);
}

INSTANTIATE_TEST_SUITE_P(CD, MisprintedFixtures, ::testing::Values(Model::C, Model::D));

TEST(Design, ShapesMatchReference) {
  EXPECT_EQ(build_design_matrix(Model::A, 2, 4).row_count(), 6u);
  EXPECT_EQ(build_design_matrix(Model::B, 2, 4).row_count(), 4u);
  EXPECT_EQ(build_design_matrix(Model::C, 3, 4).column_count(), 24u);
  EXPECT_EQ(build_design_matrix(Model::D, 3, 4).row_count(), 6u);
}

TEST(Design, ColumnSumsAreConstant) {
  for (Model m : {Model::A, Model::B, Model::C, Model::D})
    for (int T = 2; T <= 5; ++T) {
      const int S = 3;
      const auto A = build_design_matrix(m, S, T);
      for (std::size_t j = 0; j < A.column_count(); ++j) {
        auto c = A.column(j);
        EXPECT_EQ(sum(c), column_sum(m, T));
      }
    }
}

TEST(Design, ColumnIsCountOfTransitions) {
  // Independent oracle: count pairs directly.
  const auto A = build_design_matrix(Model::C, 3, 5);
  for (std::size_t j = 0; j < A.column_count(); ++j) {
    const Word w = A.word(j);
    IntVec expect(row_count(Model::C, 3), 0);
    expect[static_cast<std::size_t>(w[0] - 1)] += 1;
    for (std::size_t t = 0; t + 1 < static_cast<std::size_t>(w.length()); ++t) {
      int a = w[static_cast<std::size_t>(t)], b = w[static_cast<std::size_t>(t + 1)];
      std::size_t r = 3 + static_cast<std::size_t>((a - 1) * 2 + (b < a ? b - 1 : b - 2));
      expect[r] += 1;
    }
    EXPECT_EQ(IntVec(A.column(j).begin(), A.column(j).end()), expect);
  }
}

TEST(Design, DistinctColumnsAgreeWithScan) {
  for (Model m : {Model::A, Model::B, Model::C, Model::D})
    for (int S = 2; S <= 3; ++S)
      for (int T = 2; T <= 6; ++T) {
        if (forbids_loops(m) && S < 2) continue;
        std::set<IntVec> seen;
        for_each_column(m, S, T, [&](const Word&, const IntVec& c) { seen.insert(c); });
        auto d = distinct_columns(m, S, T);
        EXPECT_EQ(std::vector<IntVec>(seen.begin(), seen.end()), d) << model_letter(m) << S << T;
      }
}

TEST(Design, DistinctColumnCountsModelD) {
  const std::vector<std::size_t> f0{20, 30, 48, 66, 96};
  for (int T = 4; T <= 8; ++T) EXPECT_EQ(distinct_columns(Model::D, 3, T).size(), f0[static_cast<std::size_t>(T - 4)]);
}

TEST(Design, SufficientStatisticIsAu) {
  const auto A = build_design_matrix(Model::B, 3, 3);
  std::vector<Word> ws{parse_word("112"), parse_word("223"), parse_word("331")};
  auto W = PathMultiset::from_words(ws, 3, false);
  auto u = multiset_to_data_vector(W);
  EXPECT_EQ(sufficient_statistic(Model::B, W), A.multiply(u.entries));
}

TEST(Design, PathProbabilityFactorization) {
  ParameterSet p;
  p.S = 2;
  p.gamma = {Rational(1, 3), Rational(2, 3)};
  p.beta = {Rational(1, 2), Rational(1, 2), Rational(1, 4), Rational(3, 4)};
  p.c = 1;
  std::vector<ProbabilityFactor> trace;
  const Word w = parse_word("1122");
  Rational expect = Rational(1, 3) * Rational(1, 2) * Rational(1, 2) * Rational(3, 4);
  EXPECT_EQ(evaluate_path_probability(p, w, true, &trace), expect);
  EXPECT_EQ(trace.size(), 4u);
  EXPECT_EQ(evaluate_path_probability(p, w, false), Rational(1, 2) * Rational(1, 2) * Rational(3, 4));

  // Probabilities over all words of a stochastic chain sum to one.
  Rational total = 0;
  for (const auto& v : enumerate_words(2, 4, false)) total += evaluate_path_probability(p, v, true);
  EXPECT_EQ(total, Rational(1));
}

TEST(Design, ToricMapIsMonomial) {
  const auto A = build_design_matrix(Model::A, 2, 3);
  std::vector<Rational> theta{Rational(2), Rational(3), Rational(5), Rational(7), Rational(11), Rational(13)};
  auto img = toric_model_map(A, theta);
  ASSERT_EQ(img.size(), A.column_count());
  std::vector<Rational> mono(A.column_count(), Rational(1));
  Rational total = 0;
  for (std::size_t j = 0; j < A.column_count(); ++j) {
    for (std::size_t i = 0; i < A.row_count(); ++i)
      for (std::int64_t e = 0; e < A.entry(i, j); ++e) mono[j] *= theta[i];
    total += mono[j];
  }
  Rational sum = 0;
  for (std::size_t j = 0; j < A.column_count(); ++j) {
    EXPECT_EQ(img[j], mono[j] / total);
    sum += img[j];
  }
  EXPECT_EQ(sum, 1);
}

TEST(Design, Errors) {
  EXPECT_THROW(parse_model("x"), Error);
  EXPECT_EQ(parse_model("D"), Model::D);
  EXPECT_THROW(build_design_matrix(Model::D, 1, 4), Error);
  EXPECT_THROW(build_design_matrix(Model::B, 3, 12, 1000), Error);
}

TEST(Design, CsvAndJson) {
  const auto A = build_design_matrix(Model::D, 3, 4);
  const std::string csv = design_to_csv(A);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);
  auto j = design_to_json(A);
  EXPECT_EQ(j["rows"].size(), 6u);
}
