#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thmc/design.hpp"
#include "thmc/types.hpp"

// Reference data compiled into the library. Formats (all '#' lines are comments):
//   design_<m>_<S>_<T>   "m S T", a line of column words, then "label e1 e2 ..." per row
//   table_model_<m>      "T #HB f0 f1 ..." per line
//   appendix_model_<m>   blocks "T <T> <rows> <cols>" then <rows> lines; each column is a normal
namespace thmc::fixtures {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded();
}

std::vector<std::string> names();
// Throws invalid_argument for an unknown name.
std::string_view text(std::string_view name);

struct DesignFixture {
  Model model = Model::A;
  int S = 0;
  int T = 0;
  std::vector<std::string> words;
  std::vector<std::string> labels;
  std::vector<IntVec> rows;
};

struct TableRow {
  int T = 0;
  std::int64_t hilbert = 0;
  std::vector<std::int64_t> f;
};

struct AppendixBlock {
  int T = 0;
  std::vector<IntVec> normals;
};

DesignFixture parse_design(std::string_view text);
std::vector<TableRow> parse_table(std::string_view text);
std::vector<AppendixBlock> parse_appendix(std::string_view text);

// The shipped design fixtures: (a,2,4), (b,2,4), (c,3,4), (d,3,4).
DesignFixture design(Model model);
std::vector<TableRow> table(Model model);
std::vector<AppendixBlock> appendix(Model model);
std::optional<AppendixBlock> appendix_block(Model model, int T);

}  // namespace thmc::fixtures
