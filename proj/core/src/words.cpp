#include "thmc/words.hpp"

#include <limits>
#include <sstream>

namespace thmc {

namespace {

std::size_t checked_pow(std::size_t base, int exponent) {
  std::size_t r = 1;
  for (int i = 0; i < exponent; ++i) {
    if (base != 0 && r > std::numeric_limits<std::size_t>::max() / base) {
      fail(ErrorCode::size_cap_exceeded, "word count overflows 64 bits");
    }
    r *= base;
  }
  return r;
}

}  // namespace

void WordSpace::validate() const {
  require(S >= 2, ErrorCode::invalid_dimension, "S must be at least 2, got " + std::to_string(S));
  require(T >= 2, ErrorCode::invalid_dimension, "T must be at least 2, got " + std::to_string(T));
}

std::size_t WordSpace::size() const {
  validate();
  if (!no_loops) return checked_pow(static_cast<std::size_t>(S), T);
  std::size_t tail = checked_pow(static_cast<std::size_t>(S - 1), T - 1);
  if (tail > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(S)) {
    fail(ErrorCode::size_cap_exceeded, "word count overflows 64 bits");
  }
  return static_cast<std::size_t>(S) * tail;
}

bool Word::has_self_loop() const noexcept {
  for (std::size_t i = 0; i + 1 < states_.size(); ++i) {
    if (states_[i] == states_[i + 1]) return true;
  }
  return false;
}

bool is_valid(const Word& w, const WordSpace& space) noexcept {
  if (w.length() != space.T) return false;
  for (int s : w.states()) {
    if (s < 1 || s > space.S) return false;
  }
  return !(space.no_loops && w.has_self_loop());
}

std::string format_word(const Word& w, int S) {
  std::string out;
  for (std::size_t i = 0; i < w.states().size(); ++i) {
    if (S > 9 && i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  std::vector<int> states;
  if (text.find(',') != std::string_view::npos) {
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
      require(!token.empty(), ErrorCode::parse_error, "empty state in word '" + std::string(text) + "'");
      try {
        states.push_back(std::stoi(token));
      } catch (const std::exception&) {
        fail(ErrorCode::parse_error, "bad state '" + token + "'");
      }
    }
  } else {
    for (char c : text) {
      require(c >= '1' && c <= '9', ErrorCode::parse_error, "bad state character in word '" + std::string(text) + "'");
      states.push_back(c - '0');
    }
  }
  require(!states.empty(), ErrorCode::parse_error, "empty word");
  return Word(std::move(states));
}

std::size_t word_index(const Word& w, const WordSpace& space) {
  require(is_valid(w, space), space.no_loops && w.has_self_loop() ? ErrorCode::loop_violation : ErrorCode::inconsistent_words,
          "word " + format_word(w, space.S) + " is not in the word space");
  std::size_t index = static_cast<std::size_t>(w[0] - 1);
  if (!space.no_loops) {
    for (int i = 1; i < w.length(); ++i) index = index * static_cast<std::size_t>(space.S) + static_cast<std::size_t>(w[i] - 1);
    return index;
  }
  for (int i = 1; i < w.length(); ++i) {
    int digit = w[i] < w[i - 1] ? w[i] - 1 : w[i] - 2;
    index = index * static_cast<std::size_t>(space.S - 1) + static_cast<std::size_t>(digit);
  }
  return index;
}

Word word_at(std::size_t index, const WordSpace& space) {
  require(index < space.size(), ErrorCode::invalid_indices, "word index out of range");
  const std::size_t base = static_cast<std::size_t>(space.no_loops ? space.S - 1 : space.S);
  std::vector<int> digits(static_cast<std::size_t>(space.T));
  for (int i = space.T - 1; i >= 1; --i) {
    digits[static_cast<std::size_t>(i)] = static_cast<int>(index % base);
    index /= base;
  }
  digits[0] = static_cast<int>(index);
  std::vector<int> states(digits.size());
  states[0] = digits[0] + 1;
  for (std::size_t i = 1; i < digits.size(); ++i) {
    if (!space.no_loops) {
      states[i] = digits[i] + 1;
    } else {
      int s = digits[i] + 1;
      states[i] = s < states[i - 1] ? s : s + 1;
    }
  }
  return Word(std::move(states));
}

WordCursor::WordCursor(const WordSpace& space) : space_(space) {
  space_.validate();
  states_.resize(static_cast<std::size_t>(space.T));
  for (std::size_t i = 0; i < states_.size(); ++i) {
    states_[i] = (space.no_loops && i % 2 == 1) ? 2 : 1;
  }
}

void WordCursor::advance() {
  if (done_) return;
  const int S = space_.S;
  // Find the rightmost position that can be increased, then refill the tail
  // with the smallest admissible states.
  for (int pos = space_.T - 1; pos >= 0; --pos) {
    auto p = static_cast<std::size_t>(pos);
    int next = states_[p] + 1;
    if (space_.no_loops && pos > 0 && next == states_[p - 1]) ++next;
    if (next > S) continue;
    states_[p] = next;
    for (std::size_t q = p + 1; q < states_.size(); ++q) {
      int v = 1;
      if (space_.no_loops && v == states_[q - 1]) ++v;
      states_[q] = v;
    }
    return;
  }
  done_ = true;
}

std::vector<Word> enumerate_words(int S, int T, bool no_loops) {
  WordSpace space{S, T, no_loops};
  std::vector<Word> out;
  out.reserve(space.size());
  for_each_word(space, [&](const std::vector<int>& states) { out.emplace_back(states); });
  return out;
}

PathMultiset::PathMultiset(const WordSpace& space) : space_(space) { space_.validate(); }

PathMultiset PathMultiset::from_words(std::span<const Word> words, int S, bool no_loops) {
  require(!words.empty(), ErrorCode::inconsistent_words, "a path multiset needs at least one word");
  PathMultiset out(WordSpace{S, words.front().length(), no_loops});
  for (const Word& w : words) out.add(w);
  return out;
}

void PathMultiset::add(const Word& w, std::int64_t multiplicity) {
  require(multiplicity > 0, ErrorCode::invalid_argument, "multiplicity must be positive");
  if (!is_valid(w, space_)) {
    bool loop = space_.no_loops && w.has_self_loop() && w.length() == space_.T;
    fail(loop ? ErrorCode::loop_violation : ErrorCode::inconsistent_words,
         "word " + format_word(w, space_.S) + " does not match S=" + std::to_string(space_.S) +
             ", T=" + std::to_string(space_.T) + (space_.no_loops ? " without self-loops" : ""));
  }
  counts_[w] += multiplicity;
  total_ = checked_add(total_, multiplicity);
}

PathMultiset PathMultiset::merged(const PathMultiset& other) const {
  require(space_ == other.space_, ErrorCode::inconsistent_words, "cannot merge multisets over different word spaces");
  PathMultiset out = *this;
  for (const auto& [w, n] : other.counts_) out.add(w, n);
  return out;
}

DataVector multiset_to_data_vector(const PathMultiset& W) {
  require(!W.empty(), ErrorCode::inconsistent_words, "empty path multiset");
  DataVector u{W.space(), IntVec(W.space().size(), 0)};
  for (const auto& [w, n] : W.counts()) u.entries[word_index(w, W.space())] += n;
  return u;
}

}  // namespace thmc
