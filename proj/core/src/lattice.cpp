#include "thmc/lattice.hpp"

namespace thmc {

IntMat inverse_unimodular(const IntMat& U) {
  require(U.rows() == U.cols(), ErrorCode::dimension_mismatch, "inverse of a non-square matrix");
  const std::size_t n = U.rows();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = U(i, j);
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    require(p < n, ErrorCode::internal, "matrix is singular");
    std::swap(m[p], m[c]);
    Rational inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  IntMat out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      require(m[i][n + j].get_den() == 1, ErrorCode::internal, "matrix is not unimodular");
      out(i, j) = m[i][n + j].get_num();
    }
  }
  return out;
}

Lattice Lattice::from_generators(std::span<const IntVec> generators) {
  require(!generators.empty(), ErrorCode::degenerate_input, "no generators");
  LatticeBasis hnf(generators.front().size());
  for (const auto& g : generators) hnf.add(g);
  require(hnf.rank() > 0, ErrorCode::degenerate_input, "all generators are zero");
  Lattice L;
  L.basis_ = hnf.basis_columns();
  L.snf_ = smith_normal_form(L.basis_);
  require(L.snf_.rank == hnf.rank(), ErrorCode::internal, "basis is not linearly independent");
  L.U_ = L.snf_.U;
  L.U_inverse_ = inverse_unimodular(L.U_);
  L.diag_.assign(L.snf_.diagonal.begin(), L.snf_.diagonal.begin() + static_cast<std::ptrdiff_t>(L.snf_.rank));
  return L;
}

Lattice Lattice::of_design(Model model, int S, int T) {
  auto cols = distinct_columns(model, S, T);
  return from_generators(cols);
}

bool Lattice::contains(std::span<const std::int64_t> y) const {
  require(y.size() == ambient_dim(), ErrorCode::dimension_mismatch, "vector length differs from lattice dimension");
  auto u = U_.multiply(y);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i < rank()) {
      if (!mpz_divisible_p(u[i].get_mpz_t(), diag_[i].get_mpz_t())) return false;
    } else if (sgn(u[i]) != 0) {
      return false;
    }
  }
  return true;
}

bool Lattice::in_span(std::span<const std::int64_t> y) const {
  require(y.size() == ambient_dim(), ErrorCode::dimension_mismatch, "vector length differs from lattice dimension");
  auto u = U_.multiply(y);
  for (std::size_t i = rank(); i < u.size(); ++i)
    if (sgn(u[i]) != 0) return false;
  return true;
}

IntVec Lattice::coordinates(std::span<const std::int64_t> y) const {
  require(contains(y), ErrorCode::invalid_argument, "vector is not a lattice point");
  auto u = U_.multiply(y);
  IntVec z(rank());
  for (std::size_t i = 0; i < rank(); ++i) z[i] = to_int64(Int(u[i] / diag_[i]));
  return z;
}

std::vector<Rational> Lattice::rational_coordinates(std::span<const std::int64_t> y) const {
  auto u = U_.multiply(y);
  std::vector<Rational> z(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    z[i] = Rational(u[i], diag_[i]);
    z[i].canonicalize();
  }
  return z;
}

IntVec Lattice::from_coordinates(std::span<const std::int64_t> z) const {
  require(z.size() == rank(), ErrorCode::dimension_mismatch, "coordinate vector has the wrong length");
  std::vector<Int> scaled(ambient_dim());
  for (std::size_t i = 0; i < rank(); ++i) scaled[i] = diag_[i] * Int(static_cast<long>(z[i]));
  auto y = U_inverse_.multiply(std::span<const Int>(scaled));
  IntVec out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = to_int64(y[i]);
  return out;
}

std::vector<IntVec> Lattice::equations() const {
  std::vector<IntVec> eqs;
  for (std::size_t i = rank(); i < ambient_dim(); ++i) {
    IntVec row(ambient_dim());
    for (std::size_t j = 0; j < ambient_dim(); ++j) row[j] = to_int64(U_(i, j));
    eqs.push_back(make_primitive(std::move(row)));
  }
  return eqs;
}

IntVec Lattice::pull_back_functional(std::span<const std::int64_t> n) const {
  require(n.size() == rank(), ErrorCode::dimension_mismatch, "functional has the wrong length");
  // <n, z> with z_i = (U y)_i / d_i equals <U^T (n_i / d_i), y>; clear denominators.
  Int l = 1;
  for (const auto& d : diag_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  std::vector<Int> w(ambient_dim());
  for (std::size_t i = 0; i < rank(); ++i) {
    Int coef = Int(static_cast<long>(n[i])) * (l / diag_[i]);
    if (sgn(coef) == 0) continue;
    for (std::size_t j = 0; j < ambient_dim(); ++j) w[j] += coef * U_(i, j);
  }
  Int g = 0;
  for (const auto& x : w) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  IntVec out(ambient_dim(), 0);
  if (sgn(g) == 0) return out;
  for (std::size_t j = 0; j < w.size(); ++j) out[j] = to_int64(Int(w[j] / g));
  return out;
}

bool lattice_membership(const SnfResult& snf, std::span<const std::int64_t> y) {
  require(y.size() == snf.U.cols(), ErrorCode::dimension_mismatch, "vector length differs from row count");
  auto u = snf.U.multiply(y);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const bool has_d = i < snf.diagonal.size() && sgn(snf.diagonal[i]) != 0;
    if (has_d) {
      if (!mpz_divisible_p(u[i].get_mpz_t(), snf.diagonal[i].get_mpz_t())) return false;
    } else if (sgn(u[i]) != 0) {
      return false;
    }
  }
  return true;
}

bool lattice_membership(const IntMat& A, std::span<const std::int64_t> y) {
  require(y.size() == A.rows(), ErrorCode::dimension_mismatch, "vector length differs from row count");
  return lattice_membership(smith_normal_form(A), y);
}

bool residue_test(std::span<const std::int64_t> y, std::int64_t T) {
  require(T >= 2, ErrorCode::invalid_dimension, "residue test needs T >= 2");
  return sum(y) % (T - 1) == 0;
}

std::vector<IntVec> kernel_lattice_basis(const SnfResult& snf) {
  std::vector<IntVec> out;
  for (std::size_t j = snf.rank; j < snf.V.cols(); ++j) {
    IntVec z(snf.V.rows());
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = to_int64(snf.V(i, j));
    out.push_back(std::move(z));
  }
  return out;
}

std::vector<IntVec> kernel_lattice_basis(const IntMat& A) { return kernel_lattice_basis(smith_normal_form(A)); }

}  // namespace thmc
