#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "thmc/types.hpp"

namespace thmc {

// The set of words of length T over states 1..S, optionally restricted to
// words without self-loops. Words are ordered lexicographically and every
// column index in the library refers to that order.
struct WordSpace {
  int S = 0;
  int T = 0;
  bool no_loops = false;

  // S^T, or S (S-1)^(T-1) without self-loops. Throws size_cap_exceeded when
  // the count does not fit in 64 bits.
  std::size_t size() const;
  void validate() const;

  friend bool operator==(const WordSpace&, const WordSpace&) = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> states) : states_(std::move(states)) {}

  const std::vector<int>& states() const noexcept { return states_; }
  int length() const noexcept { return static_cast<int>(states_.size()); }
  int operator[](std::size_t i) const { return states_[i]; }
  int front() const { return states_.front(); }
  int back() const { return states_.back(); }
  bool has_self_loop() const noexcept;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<int> states_;
};

bool is_valid(const Word& w, const WordSpace& space) noexcept;

// Concatenated digits ("1212") for S <= 9, comma separated otherwise.
std::string format_word(const Word& w, int S);

// Accepts either form produced by format_word.
Word parse_word(std::string_view text);

std::size_t word_index(const Word& w, const WordSpace& space);
Word word_at(std::size_t index, const WordSpace& space);

std::vector<Word> enumerate_words(int S, int T, bool no_loops);

// Streaming lexicographic enumeration; `fn` receives each word in order.
// The cursor reuses one buffer, so copy the state vector if it must outlive the call.
class WordCursor {
 public:
  explicit WordCursor(const WordSpace& space);

  bool done() const noexcept { return done_; }
  const std::vector<int>& states() const noexcept { return states_; }
  void advance();

 private:
  WordSpace space_;
  std::vector<int> states_;
  bool done_ = false;
};

template <class Fn>
void for_each_word(const WordSpace& space, Fn&& fn) {
  for (WordCursor cursor(space); !cursor.done(); cursor.advance()) fn(cursor.states());
}

// Multiset of words sharing one word space.
class PathMultiset {
 public:
  explicit PathMultiset(const WordSpace& space);

  // Infers T from the first word; mixing lengths throws inconsistent_words.
  static PathMultiset from_words(std::span<const Word> words, int S, bool no_loops);

  void add(const Word& w, std::int64_t multiplicity = 1);

  const WordSpace& space() const noexcept { return space_; }
  const std::map<Word, std::int64_t>& counts() const noexcept { return counts_; }
  std::int64_t total() const noexcept { return total_; }
  bool empty() const noexcept { return total_ == 0; }

  // Multiset union (multiplicities add).
  PathMultiset merged(const PathMultiset& other) const;

  friend bool operator==(const PathMultiset&, const PathMultiset&) = default;

 private:
  WordSpace space_;
  std::map<Word, std::int64_t> counts_;
  std::int64_t total_ = 0;
};

struct DataVector {
  WordSpace space;
  IntVec entries;

  std::int64_t total() const { return sum(entries); }
};

DataVector multiset_to_data_vector(const PathMultiset& W);

}  // namespace thmc
