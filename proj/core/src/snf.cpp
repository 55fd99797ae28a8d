#include "thmc/snf.hpp"

#include <algorithm>

namespace thmc {

namespace {

int cmpabs(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

bool find_min_pivot(const IntMat& A, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < A.rows(); ++i) {
    for (std::size_t j = t; j < A.cols(); ++j) {
      const Int& a = A(i, j);
      if (sgn(a) == 0) continue;
      if (!found || cmpabs(a, best) < 0) {
        best = a;
        pi = i;
        pj = j;
        found = true;
        if (best == 1 || best == -1) return true;
      }
    }
  }
  return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMat& input, const SnfOptions& options) {
  require(!input.empty(), ErrorCode::invalid_dimension, "smith_normal_form of an empty matrix");
  const std::size_t r = input.rows();
  const std::size_t c = input.cols();
  IntMat A = input;
  IntMat U = IntMat::identity(r);
  IntMat V = IntMat::identity(c);
  const std::size_t n = std::min(r, c);

  auto swap_r = [&](std::size_t a, std::size_t b) { A.swap_rows(a, b); U.swap_rows(a, b); };
  auto swap_c = [&](std::size_t a, std::size_t b) { A.swap_cols(a, b); V.swap_cols(a, b); };

  std::size_t t = 0;
  for (; t < n; ++t) {
    std::size_t pi = 0, pj = 0;
    if (!find_min_pivot(A, t, pi, pj)) break;
    swap_r(t, pi);
    swap_c(t, pj);
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (sgn(A(i, t)) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), A(i, t).get_mpz_t(), A(t, t).get_mpz_t());
        A.add_row_multiple(i, t, -q);
        U.add_row_multiple(i, t, -q);
        if (sgn(A(i, t)) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (sgn(A(t, j)) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), A(t, j).get_mpz_t(), A(t, t).get_mpz_t());
        A.add_col_multiple(j, t, -q);
        V.add_col_multiple(j, t, -q);
        if (sgn(A(t, j)) != 0) dirty = true;
      }
      if (dirty) {
        // Some remainder is smaller than the pivot: move the smallest to (t, t).
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < r; ++i)
          if (sgn(A(i, t)) != 0 && cmpabs(A(i, t), A(bi, bj)) < 0) { bi = i; bj = t; }
        for (std::size_t j = t + 1; j < c; ++j)
          if (sgn(A(t, j)) != 0 && cmpabs(A(t, j), A(bi, bj)) < 0) { bi = t; bj = j; }
        swap_r(t, bi);
        swap_c(t, bj);
        continue;
      }
      // Row and column are clear; enforce divisibility of the remaining block.
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i) {
        for (std::size_t j = t + 1; j < c; ++j) {
          if (sgn(A(i, j)) != 0 && !mpz_divisible_p(A(i, j).get_mpz_t(), A(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
        }
      }
      if (bad == r) break;
      A.add_row_multiple(t, bad, 1);
      U.add_row_multiple(t, bad, 1);
    }
    if (sgn(A(t, t)) < 0) {
      A.negate_row(t);
      U.negate_row(t);
    }
  }

  SnfResult out;
  out.rank = t;
  out.diagonal.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.diagonal[i] = A(i, i);
  out.U = std::move(U);
  out.V = std::move(V);
  out.D = std::move(A);
  verify_snf(input, out, options);
  return out;
}

void verify_snf(const IntMat& A, const SnfResult& r, const SnfOptions& options) {
  require(r.U.rows() == A.rows() && r.U.cols() == A.rows() && r.V.rows() == A.cols() && r.V.cols() == A.cols() &&
              r.D.rows() == A.rows() && r.D.cols() == A.cols(),
          ErrorCode::internal, "SNF factor dimensions are wrong");
  require(r.U * A * r.V == r.D, ErrorCode::internal, "SNF check failed: U*A*V != D");
  for (std::size_t i = 0; i < r.D.rows(); ++i) {
    for (std::size_t j = 0; j < r.D.cols(); ++j) {
      if (i != j) require(sgn(r.D(i, j)) == 0, ErrorCode::internal, "SNF check failed: D is not diagonal");
    }
  }
  for (std::size_t i = 0; i < r.diagonal.size(); ++i) {
    require(r.diagonal[i] == r.D(i, i) && sgn(r.diagonal[i]) >= 0, ErrorCode::internal,
            "SNF check failed: diagonal entries");
    require((i < r.rank) == (sgn(r.diagonal[i]) > 0), ErrorCode::internal, "SNF check failed: rank");
    if (i + 1 < r.diagonal.size() && sgn(r.diagonal[i]) > 0) {
      require(mpz_divisible_p(r.diagonal[i + 1].get_mpz_t(), r.diagonal[i].get_mpz_t()) != 0, ErrorCode::internal,
              "SNF check failed: divisibility chain");
    }
  }
  require(abs(determinant(r.U)) == 1, ErrorCode::internal, "SNF check failed: U is not unimodular");
  if (r.V.rows() <= options.det_check_limit) {
    require(abs(determinant(r.V)) == 1, ErrorCode::internal, "SNF check failed: V is not unimodular");
  }
}

LatticeBasis::LatticeBasis(std::size_t dim) : dim_(dim) {
  require(dim > 0, ErrorCode::invalid_dimension, "lattice dimension must be positive");
}

void LatticeBasis::add(std::span<const std::int64_t> v) { add(to_big(v)); }

void LatticeBasis::add(std::vector<Int> v) {
  require(v.size() == dim_, ErrorCode::dimension_mismatch, "vector length differs from lattice dimension");
  std::size_t k = 0;
  bool changed = false;
  for (std::size_t p = 0; p < dim_; ++p) {
    while (k < rows_.size() && pivots_[k] < p) ++k;
    if (sgn(v[p]) == 0) continue;
    if (k < rows_.size() && pivots_[k] == p) {
      auto& row = rows_[k];
      if (mpz_divisible_p(v[p].get_mpz_t(), row[p].get_mpz_t())) {
        Int q = v[p] / row[p];
        for (std::size_t j = p; j < dim_; ++j) v[j] -= q * row[j];
        continue;
      }
      changed = true;
      // [row; v] <- [[s, t], [-v_p/g, row_p/g]] * [row; v], a unimodular step.
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), row[p].get_mpz_t(), v[p].get_mpz_t());
      Int a = row[p] / g;
      Int b = v[p] / g;
      for (std::size_t j = p; j < dim_; ++j) {
        Int r_new = s * row[j] + t * v[j];
        Int v_new = a * v[j] - b * row[j];
        row[j] = std::move(r_new);
        v[j] = std::move(v_new);
      }
      continue;
    }
    // New pivot: make it positive and insert in pivot order.
    if (sgn(v[p]) < 0)
      for (auto& x : v) x = -x;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(k), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(k), p);
    changed = true;
    break;
  }
  if (!changed) return;
  // Reduce entries above each pivot into [0, pivot) to keep numbers small.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (sgn(rows_[i][pivots_[i]]) < 0)
      for (auto& x : rows_[i]) x = -x;
  }
  for (std::size_t i = rows_.size(); i-- > 0;) {
    const std::size_t p = pivots_[i];
    for (std::size_t h = 0; h < i; ++h) {
      if (sgn(rows_[h][p]) == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), rows_[h][p].get_mpz_t(), rows_[i][p].get_mpz_t());
      if (sgn(q) == 0) continue;
      for (std::size_t j = p; j < dim_; ++j) rows_[h][j] -= q * rows_[i][j];
    }
  }
}

IntMat LatticeBasis::basis_columns() const {
  require(!rows_.empty(), ErrorCode::degenerate_input, "lattice is zero");
  IntMat m(dim_, rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k)
    for (std::size_t i = 0; i < dim_; ++i) m(i, k) = rows_[k][i];
  return m;
}

}  // namespace thmc
