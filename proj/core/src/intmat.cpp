#include "thmc/intmat.hpp"

#include <sstream>

namespace thmc {

IntMat::IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_columns(std::span<const IntVec> columns) {
  require(!columns.empty(), ErrorCode::invalid_dimension, "no columns");
  IntMat m(columns.front().size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    require(columns[j].size() == m.rows(), ErrorCode::dimension_mismatch, "columns of different lengths");
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = static_cast<long>(columns[j][i]);
  }
  return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<long>>& rows) {
  require(!rows.empty(), ErrorCode::invalid_dimension, "no rows");
  IntMat m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == m.cols(), ErrorCode::dimension_mismatch, "ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Int> IntMat::column(std::size_t j) const {
  std::vector<Int> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<Int> IntMat::multiply(std::span<const Int> v) const {
  require(v.size() == cols_, ErrorCode::dimension_mismatch, "vector length differs from column count");
  std::vector<Int> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Int& a = (*this)(i, j);
      if (sgn(a) != 0 && sgn(v[j]) != 0) out[i] += a * v[j];
    }
  }
  return out;
}

std::vector<Int> IntMat::multiply(std::span<const std::int64_t> v) const {
  auto big = to_big(v);
  return multiply(std::span<const Int>(big));
}

void IntMat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMat::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMat::add_row_multiple(std::size_t a, std::size_t b, const Int& f) {
  if (sgn(f) == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const Int& x = (*this)(b, j);
    if (sgn(x) != 0) (*this)(a, j) += f * x;
  }
}

void IntMat::add_col_multiple(std::size_t a, std::size_t b, const Int& f) {
  if (sgn(f) == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Int& x = (*this)(i, b);
    if (sgn(x) != 0) (*this)(i, a) += f * x;
  }
}

void IntMat::negate_row(std::size_t a) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
}

void IntMat::negate_col(std::size_t a) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) = -(*this)(i, a);
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  require(a.cols_ == b.rows_, ErrorCode::dimension_mismatch, "matrix product dimension mismatch");
  IntMat c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Int& y = b(k, j);
        if (sgn(y) != 0) c(i, j) += x * y;
      }
    }
  }
  return c;
}

Int determinant(const IntMat& input) {
  require(input.rows() == input.cols(), ErrorCode::dimension_mismatch, "determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMat m = input;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank(const IntMat& input) {
  IntMat m = input;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Int a = m(r, c);
      Int b = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) * a - m(r, j) * b;
      Int g = 0;
      for (std::size_t j = c; j < m.cols(); ++j) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m(i, j).get_mpz_t());
      if (g > 1)
        for (std::size_t j = c; j < m.cols(); ++j) mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), g.get_mpz_t());
    }
    ++r;
  }
  return r;
}

IntMat read_matrix(std::istream& in) {
  std::size_t r = 0, c = 0;
  require(static_cast<bool>(in >> r >> c), ErrorCode::parse_error, "expected matrix header \"r c\"");
  require(r > 0 && c > 0, ErrorCode::invalid_dimension, "matrix dimensions must be positive");
  IntMat m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      std::string token;
      require(static_cast<bool>(in >> token), ErrorCode::parse_error, "matrix ended early");
      require(m(i, j).set_str(token, 10) == 0, ErrorCode::parse_error, "bad integer '" + token + "'");
    }
  }
  return m;
}

void write_matrix(std::ostream& out, const IntMat& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
}

std::string to_text(const IntMat& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

std::vector<Int> to_big(std::span<const std::int64_t> v) {
  std::vector<Int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<long>(v[i]);
  return out;
}

}  // namespace thmc
