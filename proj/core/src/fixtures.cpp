#include "thmc/fixtures.hpp"

#include <cctype>
#include <sstream>

#include "thmc/error.hpp"

namespace thmc::fixtures {

namespace {

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::int64_t to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  fail(ErrorCode::parse_error, "not an integer: '" + s + "'");
}

std::string suffix(Model m) { return std::string(1, static_cast<char>(std::tolower(model_letter(m)))); }

}  // namespace

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& [name, body] : detail::embedded()) out.emplace_back(name);
  return out;
}

std::string_view text(std::string_view name) {
  for (const auto& [n, body] : detail::embedded())
    if (n == name) return body;
  fail(ErrorCode::invalid_argument, "no embedded fixture named '" + std::string(name) + "'");
}

DesignFixture parse_design(std::string_view body) {
  auto lines = content_lines(body);
  require(lines.size() >= 3, ErrorCode::parse_error, "design fixture is too short");
  auto head = tokens(lines[0]);
  require(head.size() == 3, ErrorCode::parse_error, "design fixture header must be 'model S T'");
  DesignFixture f;
  f.model = parse_model(head[0]);
  f.S = static_cast<int>(to_int(head[1]));
  f.T = static_cast<int>(to_int(head[2]));
  f.words = tokens(lines[1]);
  for (std::size_t r = 2; r < lines.size(); ++r) {
    auto t = tokens(lines[r]);
    require(t.size() == f.words.size() + 1, ErrorCode::parse_error, "design fixture row " + std::to_string(r - 1) + " has the wrong length");
    f.labels.push_back(t[0]);
    IntVec row;
    for (std::size_t c = 1; c < t.size(); ++c) row.push_back(to_int(t[c]));
    f.rows.push_back(std::move(row));
  }
  return f;
}

std::vector<TableRow> parse_table(std::string_view body) {
  std::vector<TableRow> out;
  for (const auto& line : content_lines(body)) {
    auto t = tokens(line);
    require(t.size() >= 3, ErrorCode::parse_error, "table row needs T, #HB and an f-vector");
    TableRow row;
    row.T = static_cast<int>(to_int(t[0]));
    row.hilbert = to_int(t[1]);
    for (std::size_t i = 2; i < t.size(); ++i) row.f.push_back(to_int(t[i]));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<AppendixBlock> parse_appendix(std::string_view body) {
  auto lines = content_lines(body);
  std::vector<AppendixBlock> out;
  std::size_t i = 0;
  while (i < lines.size()) {
    auto head = tokens(lines[i]);
    require(head.size() == 4 && head[0] == "T", ErrorCode::parse_error, "expected a block header 'T <T> <rows> <cols>'");
    AppendixBlock block;
    block.T = static_cast<int>(to_int(head[1]));
    const auto rows = static_cast<std::size_t>(to_int(head[2]));
    const auto cols = static_cast<std::size_t>(to_int(head[3]));
    require(i + rows < lines.size(), ErrorCode::parse_error, "appendix block is truncated");
    block.normals.assign(cols, IntVec(rows, 0));
    for (std::size_t r = 0; r < rows; ++r) {
      auto t = tokens(lines[i + 1 + r]);
      require(t.size() == cols, ErrorCode::parse_error, "appendix row has the wrong length");
      for (std::size_t c = 0; c < cols; ++c) block.normals[c][r] = to_int(t[c]);
    }
    out.push_back(std::move(block));
    i += rows + 1;
  }
  return out;
}

DesignFixture design(Model model) {
  const int s = (model == Model::A || model == Model::B) ? 2 : 3;
  return parse_design(text("design_" + suffix(model) + "_" + std::to_string(s) + "_4"));
}

std::vector<TableRow> table(Model model) { return parse_table(text("table_model_" + suffix(model))); }

std::vector<AppendixBlock> appendix(Model model) { return parse_appendix(text("appendix_model_" + suffix(model))); }

std::optional<AppendixBlock> appendix_block(Model model, int T) {
  for (auto& b : appendix(model))
    if (b.T == T) return b;
  return std::nullopt;
}

}  // namespace thmc::fixtures
