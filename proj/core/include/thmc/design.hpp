#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "thmc/types.hpp"
#include "thmc/words.hpp"

namespace thmc {

// (a) full model, (b) without initial parameters, (c) without self-loops,
// (d) without initial parameters and without self-loops.
enum class Model { A, B, C, D };

constexpr bool has_initial_rows(Model m) noexcept { return m == Model::A || m == Model::C; }
constexpr bool forbids_loops(Model m) noexcept { return m == Model::C || m == Model::D; }
char model_letter(Model m) noexcept;
Model parse_model(std::string_view text);

struct RowLabel {
  enum class Kind { initial, transition };
  Kind kind = Kind::transition;
  int from = 0;  // the state itself for initial rows
  int to = 0;

  std::string str() const;
  friend bool operator==(const RowLabel&, const RowLabel&) = default;
};

// Initial rows ascending, then transition rows in lexicographic (i, j) order.
std::vector<RowLabel> row_labels(Model model, int S);
std::size_t row_count(Model model, int S);
std::int64_t column_sum(Model model, int T);
WordSpace word_space(Model model, int S, int T);

// Position of the transition i -> j in the row order of `model`.
std::size_t transition_row(Model model, int S, int i, int j);
std::size_t initial_row(Model model, int S, int s);

IntVec column_of_word(Model model, int S, int T, const Word& w);

inline constexpr std::size_t kDefaultMaxColumns = 10'000'000;

// Column-major dense storage; columns follow lexicographic word order.
class DesignMatrix {
 public:
  DesignMatrix(Model model, int S, int T, std::vector<RowLabel> rows, std::vector<std::int64_t> data);

  Model model() const noexcept { return model_; }
  int S() const noexcept { return S_; }
  int T() const noexcept { return T_; }
  WordSpace space() const { return word_space(model_, S_, T_); }
  const std::vector<RowLabel>& rows() const noexcept { return rows_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t column_count() const noexcept { return data_.size() / rows_.size(); }

  std::span<const std::int64_t> column(std::size_t j) const {
    return {data_.data() + j * rows_.size(), rows_.size()};
  }
  std::int64_t entry(std::size_t i, std::size_t j) const { return data_[j * rows_.size() + i]; }
  Word word(std::size_t j) const { return word_at(j, space()); }

  IntVec multiply(std::span<const std::int64_t> u) const;

 private:
  Model model_;
  int S_;
  int T_;
  std::vector<RowLabel> rows_;
  std::vector<std::int64_t> data_;
};

DesignMatrix build_design_matrix(Model model, int S, int T, std::size_t max_columns = kDefaultMaxColumns);

// Streams (word, column) pairs in lexicographic order without materialising the matrix.
template <class Fn>
void for_each_column(Model model, int S, int T, Fn&& fn) {
  const WordSpace space = word_space(model, S, T);
  for_each_word(space, [&](const std::vector<int>& states) {
    Word w(states);
    fn(w, column_of_word(model, S, T, w));
  });
}

// The distinct column vectors, sorted lexicographically. Computed by a
// dynamic program over (start, last state, partial counts), so it stays
// cheap when the number of words is astronomically large.
std::vector<IntVec> distinct_columns(Model model, int S, int T);

IntVec sufficient_statistic(Model model, const PathMultiset& W);

struct ParameterSet {
  int S = 0;
  std::vector<Rational> gamma;  // length S
  std::vector<Rational> beta;   // S*S, row-major: beta[(i-1)*S + (j-1)]
  Rational c = 1;

  static ParameterSet uniform(int S, const Rational& gamma_value, const Rational& beta_value,
                              const Rational& c = 1);
  const Rational& beta_at(int i, int j) const { return beta[static_cast<std::size_t>((i - 1) * S + (j - 1))]; }
  void validate(bool no_loops) const;
};

// One multiplicative factor of the path probability, in evaluation order.
struct ProbabilityFactor {
  RowLabel label;
  Rational value;
};

Rational evaluate_path_probability(const ParameterSet& params, const Word& w, bool with_initial,
                                   std::vector<ProbabilityFactor>* trace = nullptr);

std::vector<Rational> toric_model_map(const DesignMatrix& A, std::span<const Rational> theta);

std::string design_to_csv(const DesignMatrix& A);
nlohmann::ordered_json design_to_json(const DesignMatrix& A);

}  // namespace thmc
