#pragma once

#include <vector>

#include "thmc/intmat.hpp"

namespace thmc {

struct SnfResult {
  IntMat U;  // r x r
  IntMat V;  // c x c
  IntMat D;  // r x c
  std::vector<Int> diagonal;  // min(r, c) entries, d_1 | d_2 | ...
  std::size_t rank = 0;
};

struct SnfOptions {
  // Bareiss determinants of U and V are checked up to this size; beyond it
  // unimodularity rests on V being a product of elementary operations.
  std::size_t det_check_limit = 256;
};

// U * A * V = D with unimodular U, V, found with minimal-|pivot| elimination.
// The result is verified before it is returned; a failed check throws internal.
SnfResult smith_normal_form(const IntMat& A, const SnfOptions& options = {});

// Throws internal with a description if any SNF invariant fails.
void verify_snf(const IntMat& A, const SnfResult& r, const SnfOptions& options = {});

// Hermite-style basis (rows) of the lattice spanned by a stream of integer
// vectors. Vectors are folded in one at a time, so generating sets far too
// large to hold as a matrix are fine.
class LatticeBasis {
 public:
  explicit LatticeBasis(std::size_t dim);

  void add(std::span<const std::int64_t> v);
  void add(std::vector<Int> v);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  // d x rank matrix whose columns are the basis vectors.
  IntMat basis_columns() const;
  // Echelon rows: rows()[k] has its first non-zero entry at pivots()[k].
  const std::vector<std::vector<Int>>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

 private:
  std::size_t dim_;
  std::vector<std::vector<Int>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace thmc
