#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "thmc/types.hpp"

namespace thmc {

// Dense arbitrary-precision integer matrix, row-major.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols);

  static IntMat identity(std::size_t n);
  // Columns become the matrix columns; all must share one length.
  static IntMat from_columns(std::span<const IntVec> columns);
  static IntMat from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Int> column(std::size_t j) const;
  IntMat transpose() const;
  std::vector<Int> multiply(std::span<const Int> v) const;
  std::vector<Int> multiply(std::span<const std::int64_t> v) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row a += f * row b
  void add_row_multiple(std::size_t a, std::size_t b, const Int& f);
  void add_col_multiple(std::size_t a, std::size_t b, const Int& f);
  void negate_row(std::size_t a);
  void negate_col(std::size_t a);

  friend IntMat operator*(const IntMat& a, const IntMat& b);
  friend bool operator==(const IntMat&, const IntMat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

// Fraction-free Gaussian elimination; exact for any square matrix.
Int determinant(const IntMat& m);
std::size_t rank(const IntMat& m);

// Plain-text layout: a line "r c" followed by r rows of c integers.
IntMat read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const IntMat& m);
std::string to_text(const IntMat& m);

std::vector<Int> to_big(std::span<const std::int64_t> v);

}  // namespace thmc
