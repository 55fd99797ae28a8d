#include "thmc/design.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace thmc {

char model_letter(Model m) noexcept {
  switch (m) {
    case Model::A: return 'a';
    case Model::B: return 'b';
    case Model::C: return 'c';
    case Model::D: return 'd';
  }
  return '?';
}

Model parse_model(std::string_view text) {
  if (text.size() == 1) {
    switch (text[0]) {
      case 'a': case 'A': return Model::A;
      case 'b': case 'B': return Model::B;
      case 'c': case 'C': return Model::C;
      case 'd': case 'D': return Model::D;
      default: break;
    }
  }
  fail(ErrorCode::invalid_argument, "unknown model '" + std::string(text) + "' (expected a, b, c or d)");
}

std::string RowLabel::str() const {
  if (kind == Kind::initial) return std::to_string(from);
  if (from > 9 || to > 9) return std::to_string(from) + "," + std::to_string(to);
  return std::to_string(from) + std::to_string(to);
}

std::vector<RowLabel> row_labels(Model model, int S) {
  require(S >= 2, ErrorCode::invalid_dimension, "S must be at least 2");
  std::vector<RowLabel> rows;
  if (has_initial_rows(model)) {
    for (int s = 1; s <= S; ++s) rows.push_back({RowLabel::Kind::initial, s, s});
  }
  for (int i = 1; i <= S; ++i) {
    for (int j = 1; j <= S; ++j) {
      if (forbids_loops(model) && i == j) continue;
      rows.push_back({RowLabel::Kind::transition, i, j});
    }
  }
  return rows;
}

std::size_t row_count(Model model, int S) {
  auto s = static_cast<std::size_t>(S);
  std::size_t transitions = forbids_loops(model) ? s * (s - 1) : s * s;
  return transitions + (has_initial_rows(model) ? s : 0);
}

std::int64_t column_sum(Model model, int T) { return has_initial_rows(model) ? T : T - 1; }

WordSpace word_space(Model model, int S, int T) {
  WordSpace space{S, T, forbids_loops(model)};
  space.validate();
  return space;
}

std::size_t transition_row(Model model, int S, int i, int j) {
  require(i >= 1 && i <= S && j >= 1 && j <= S, ErrorCode::invalid_indices, "transition state out of range");
  std::size_t offset = has_initial_rows(model) ? static_cast<std::size_t>(S) : 0;
  if (!forbids_loops(model)) return offset + static_cast<std::size_t>((i - 1) * S + (j - 1));
  require(i != j, ErrorCode::loop_violation, "self-loop transition has no row in a loop-free model");
  return offset + static_cast<std::size_t>((i - 1) * (S - 1) + (j < i ? j - 1 : j - 2));
}

std::size_t initial_row(Model model, int S, int s) {
  require(has_initial_rows(model), ErrorCode::invalid_argument, "model has no initial-state rows");
  require(s >= 1 && s <= S, ErrorCode::invalid_indices, "initial state out of range");
  return static_cast<std::size_t>(s - 1);
}

IntVec column_of_word(Model model, int S, int T, const Word& w) {
  const WordSpace space = word_space(model, S, T);
  if (!is_valid(w, space)) {
    bool loop = forbids_loops(model) && w.length() == T && w.has_self_loop();
    fail(loop ? ErrorCode::loop_violation : ErrorCode::inconsistent_words,
         "word " + format_word(w, S) + " is not a valid word for this model");
  }
  IntVec col(row_count(model, S), 0);
  if (has_initial_rows(model)) col[initial_row(model, S, w.front())] = 1;
  for (int t = 0; t + 1 < T; ++t) ++col[transition_row(model, S, w[static_cast<std::size_t>(t)], w[static_cast<std::size_t>(t + 1)])];
  return col;
}

DesignMatrix::DesignMatrix(Model model, int S, int T, std::vector<RowLabel> rows, std::vector<std::int64_t> data)
    : model_(model), S_(S), T_(T), rows_(std::move(rows)), data_(std::move(data)) {
  require(!rows_.empty() && data_.size() % rows_.size() == 0, ErrorCode::dimension_mismatch,
          "design matrix data does not fill whole columns");
}

IntVec DesignMatrix::multiply(std::span<const std::int64_t> u) const {
  require(u.size() == column_count(), ErrorCode::dimension_mismatch, "data vector length differs from column count");
  IntVec out(row_count(), 0);
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] == 0) continue;
    auto col = column(j);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(out[i], checked_mul(u[j], col[i]));
  }
  return out;
}

DesignMatrix build_design_matrix(Model model, int S, int T, std::size_t max_columns) {
  const WordSpace space = word_space(model, S, T);
  const std::size_t columns = space.size();
  require(columns <= max_columns, ErrorCode::size_cap_exceeded,
          "design matrix would have " + std::to_string(columns) + " columns (cap " + std::to_string(max_columns) + ")");
  auto rows = row_labels(model, S);
  std::vector<std::int64_t> data;
  data.reserve(columns * rows.size());
  for_each_column(model, S, T, [&](const Word&, const IntVec& col) { data.insert(data.end(), col.begin(), col.end()); });
  return DesignMatrix(model, S, T, std::move(rows), std::move(data));
}

std::vector<IntVec> distinct_columns(Model model, int S, int T) {
  const WordSpace space = word_space(model, S, T);
  const std::size_t rows = row_count(model, S);
  const std::size_t offset = has_initial_rows(model) ? static_cast<std::size_t>(S) : 0;
  // State layout: [last state, column entries...]; the initial row is part
  // of the column so two prefixes with different starts never merge.
  std::unordered_set<IntVec, IntVecHash> layer;
  for (int s = 1; s <= S; ++s) {
    IntVec state(rows + 1, 0);
    state[0] = s;
    if (offset) state[1 + static_cast<std::size_t>(s - 1)] = 1;
    layer.insert(std::move(state));
  }
  for (int t = 1; t < T; ++t) {
    std::unordered_set<IntVec, IntVecHash> next;
    next.reserve(layer.size() * 2);
    for (const IntVec& state : layer) {
      const int last = static_cast<int>(state[0]);
      for (int j = 1; j <= S; ++j) {
        if (space.no_loops && j == last) continue;
        IntVec grown = state;
        grown[0] = j;
        ++grown[1 + transition_row(model, S, last, j)];
        next.insert(std::move(grown));
      }
    }
    layer = std::move(next);
  }
  std::unordered_set<IntVec, IntVecHash> columns;
  for (const IntVec& state : layer) columns.insert(IntVec(state.begin() + 1, state.end()));
  std::vector<IntVec> out(columns.begin(), columns.end());
  std::sort(out.begin(), out.end());
  return out;
}

IntVec sufficient_statistic(Model model, const PathMultiset& W) {
  require(!W.empty(), ErrorCode::inconsistent_words, "empty path multiset");
  const WordSpace& space = W.space();
  require(space.no_loops == forbids_loops(model), ErrorCode::inconsistent_words,
          "multiset loop policy does not match the model");
  IntVec stat(row_count(model, space.S), 0);
  for (const auto& [w, n] : W.counts()) {
    IntVec col = column_of_word(model, space.S, space.T, w);
    for (std::size_t i = 0; i < stat.size(); ++i) stat[i] = checked_add(stat[i], checked_mul(n, col[i]));
  }
  return stat;
}

ParameterSet ParameterSet::uniform(int S, const Rational& gamma_value, const Rational& beta_value, const Rational& c) {
  ParameterSet p;
  p.S = S;
  p.gamma.assign(static_cast<std::size_t>(S), gamma_value);
  p.beta.assign(static_cast<std::size_t>(S * S), beta_value);
  p.c = c;
  return p;
}

void ParameterSet::validate(bool no_loops) const {
  require(S >= 2, ErrorCode::invalid_dimension, "parameter set needs S >= 2");
  require(gamma.size() == static_cast<std::size_t>(S) && beta.size() == static_cast<std::size_t>(S * S),
          ErrorCode::dimension_mismatch, "parameter vectors are not dimensioned for S");
  require(c > 0, ErrorCode::invalid_argument, "normalizing constant must be positive");
  for (const auto& g : gamma) require(g > 0, ErrorCode::invalid_argument, "initial parameters must be positive");
  for (const auto& b : beta) require(b >= 0, ErrorCode::invalid_argument, "transition weights must be non-negative");
  if (no_loops) {
    for (int i = 1; i <= S; ++i) {
      require(beta_at(i, i) == 0, ErrorCode::loop_violation, "loop-free parameters need beta_ii = 0");
    }
  }
}

Rational evaluate_path_probability(const ParameterSet& params, const Word& w, bool with_initial,
                                   std::vector<ProbabilityFactor>* trace) {
  require(params.gamma.size() == static_cast<std::size_t>(params.S) &&
              params.beta.size() == static_cast<std::size_t>(params.S * params.S),
          ErrorCode::dimension_mismatch, "parameter vectors are not dimensioned for S");
  for (int s : w.states()) require(s >= 1 && s <= params.S, ErrorCode::invalid_indices, "state out of range");
  Rational p = params.c;
  if (with_initial) {
    const Rational& g = params.gamma[static_cast<std::size_t>(w.front() - 1)];
    p *= g;
    if (trace) trace->push_back({{RowLabel::Kind::initial, w.front(), w.front()}, g});
  }
  for (int t = 0; t + 1 < w.length(); ++t) {
    int i = w[static_cast<std::size_t>(t)];
    int j = w[static_cast<std::size_t>(t + 1)];
    const Rational& b = params.beta_at(i, j);
    p *= b;
    if (trace) trace->push_back({{RowLabel::Kind::transition, i, j}, b});
  }
  return p;
}

std::vector<Rational> toric_model_map(const DesignMatrix& A, std::span<const Rational> theta) {
  require(theta.size() == A.row_count(), ErrorCode::dimension_mismatch, "theta length must equal the row count");
  std::vector<Rational> out(A.column_count());
  Rational total = 0;
  for (std::size_t j = 0; j < out.size(); ++j) {
    Rational monomial = 1;
    auto col = A.column(j);
    for (std::size_t i = 0; i < col.size(); ++i) {
      if (col[i] == 0) continue;
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), theta[i].get_num_mpz_t(), static_cast<unsigned long>(col[i]));
      mpz_pow_ui(den.get_mpz_t(), theta[i].get_den_mpz_t(), static_cast<unsigned long>(col[i]));
      monomial *= Rational(num, den);
    }
    monomial.canonicalize();
    out[j] = monomial;
    total += monomial;
  }
  require(total != 0, ErrorCode::zero_normalizer, "all monomials vanish");
  for (auto& v : out) v /= total;
  return out;
}

std::string design_to_csv(const DesignMatrix& A) {
  std::ostringstream out;
  out << "row";
  for (std::size_t j = 0; j < A.column_count(); ++j) out << ',' << format_word(A.word(j), A.S());
  out << '\n';
  for (std::size_t i = 0; i < A.row_count(); ++i) {
    out << A.rows()[i].str();
    for (std::size_t j = 0; j < A.column_count(); ++j) out << ',' << A.entry(i, j);
    out << '\n';
  }
  return out.str();
}

nlohmann::ordered_json design_to_json(const DesignMatrix& A) {
  nlohmann::ordered_json j;
  j["model"] = std::string(1, model_letter(A.model()));
  j["S"] = A.S();
  j["T"] = A.T();
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : A.rows()) rows.push_back(r.str());
  j["rows"] = rows;
  nlohmann::ordered_json cols = nlohmann::ordered_json::object();
  for (std::size_t c = 0; c < A.column_count(); ++c) {
    auto col = A.column(c);
    cols[format_word(A.word(c), A.S())] = IntVec(col.begin(), col.end());
  }
  j["columns"] = cols;
  return j;
}

}  // namespace thmc
