#include <gtest/gtest.h>

#include <set>

#include "thmc/error.hpp"
#include "thmc/words.hpp"

using namespace thmc;

TEST(WordSpace, SizesWithAndWithoutLoops) {
  EXPECT_EQ((WordSpace{2, 4, false}.size()), 16u);
  EXPECT_EQ((WordSpace{3, 4, true}.size()), 24u);
  EXPECT_EQ((WordSpace{3, 5, true}.size()), 48u);
  EXPECT_EQ((WordSpace{4, 3, false}.size()), 64u);
  EXPECT_THROW((WordSpace{0, 4, false}.validate()), Error);
  EXPECT_THROW((WordSpace{3, 0, false}.validate()), Error);
  EXPECT_THROW((WordSpace{1, 3, true}.validate()), Error);
}

TEST(WordSpace, HugeSpaceIsRejected) {
  try {
    (void)WordSpace{10, 40, false}.size();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::size_cap_exceeded);
  }
}

TEST(Words, EnumerationIsLexicographicAndIndexed) {
  for (bool nl : {false, true}) {
    WordSpace sp{3, 4, nl};
    auto ws = enumerate_words(3, 4, nl);
    ASSERT_EQ(ws.size(), sp.size());
    EXPECT_TRUE(std::is_sorted(ws.begin(), ws.end()));
    for (std::size_t i = 0; i < ws.size(); ++i) {
      EXPECT_EQ(word_index(ws[i], sp), i);
      EXPECT_EQ(word_at(i, sp), ws[i]);
      EXPECT_TRUE(is_valid(ws[i], sp));
      if (nl) {
        EXPECT_FALSE(ws[i].has_self_loop());
      }
    }
  }
}

TEST(Words, BruteForceCountWithoutLoops) {
  // Oracle: filter all S^T words.
  for (int S = 2; S <= 4; ++S)
    for (int T = 2; T <= 6; ++T) {
      std::size_t n = 0;
      for (const auto& w : enumerate_words(S, T, false)) n += !w.has_self_loop();
      EXPECT_EQ(enumerate_words(S, T, true).size(), n);
    }
}

TEST(Words, ParseAndFormat) {
  Word w = parse_word("123131");
  EXPECT_EQ(w.length(), 6);
  EXPECT_EQ(format_word(w, 3), "123131");
  EXPECT_EQ(format_word(parse_word("1,2,1"), 3), "121");
  EXPECT_EQ(parse_word("10,2").length(), 2);
  EXPECT_THROW(parse_word("12a"), Error);
  EXPECT_THROW(parse_word(""), Error);
  EXPECT_THROW(parse_word("1 2 1"), Error);
  EXPECT_THROW(enumerate_words(3, 1, false), Error);
  EXPECT_FALSE(is_valid(parse_word("1223"), WordSpace{3, 4, true}));
  EXPECT_FALSE(is_valid(parse_word("1243"), WordSpace{3, 4, false}));
}

TEST(Words, CursorMatchesEnumeration) {
  WordSpace sp{3, 5, true};
  std::vector<Word> seen;
  for_each_word(sp, [&](const std::vector<int>& s) { seen.push_back(Word(s)); });
  EXPECT_EQ(seen, enumerate_words(3, 5, true));
}

TEST(PathMultiset, FromWordsAndMerge) {
  std::vector<Word> a{parse_word("112"), parse_word("223"), parse_word("112")};
  auto W = PathMultiset::from_words(a, 3, false);
  EXPECT_EQ(W.total(), 3);
  EXPECT_EQ(W.counts().at(parse_word("112")), 2);
  auto V = W.merged(W);
  EXPECT_EQ(V.total(), 6);
  auto d = multiset_to_data_vector(W);
  EXPECT_EQ(d.total(), 3);
  EXPECT_EQ(d.entries[word_index(parse_word("112"), W.space())], 2);
  std::vector<Word> mixed{parse_word("12"), parse_word("121")};
  EXPECT_THROW(PathMultiset::from_words(mixed, 3, false), Error);
  std::vector<Word> loops{parse_word("112")};
  EXPECT_THROW(PathMultiset::from_words(loops, 3, true), Error);
}
