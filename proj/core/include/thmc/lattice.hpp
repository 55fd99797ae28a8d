#pragma once

#include <span>
#include <vector>

#include "thmc/design.hpp"
#include "thmc/snf.hpp"

namespace thmc {

// The lattice spanned by a set of integer vectors, in Smith coordinates:
// with U * B * V = D for a basis B, y lies in the lattice iff (U y)_i is
// divisible by d_i for i < rank and vanishes beyond.
class Lattice {
 public:
  static Lattice from_generators(std::span<const IntVec> generators);
  static Lattice of_design(Model model, int S, int T);

  std::size_t ambient_dim() const noexcept { return U_.rows(); }
  std::size_t rank() const noexcept { return diag_.size(); }
  const IntMat& U() const noexcept { return U_; }
  const IntMat& basis() const noexcept { return basis_; }
  const SnfResult& basis_snf() const noexcept { return snf_; }
  // The non-zero invariant factors d_1 | ... | d_rank.
  const std::vector<Int>& diagonal() const noexcept { return diag_; }

  bool contains(std::span<const std::int64_t> y) const;
  bool in_span(std::span<const std::int64_t> y) const;

  // Isomorphism from the lattice onto Z^rank; y must be a lattice point.
  IntVec coordinates(std::span<const std::int64_t> y) const;
  // Same linear map on the real span (exact rationals).
  std::vector<Rational> rational_coordinates(std::span<const std::int64_t> y) const;
  IntVec from_coordinates(std::span<const std::int64_t> z) const;
  // Integer row vectors cutting out the linear span (empty when full rank).
  std::vector<IntVec> equations() const;
  // Maps a linear functional on Z^rank back to ambient coordinates, scaled
  // to a primitive integer vector with the same sign on the span.
  IntVec pull_back_functional(std::span<const std::int64_t> n) const;

 private:
  IntMat basis_;
  SnfResult snf_;
  IntMat U_;
  IntMat U_inverse_;
  std::vector<Int> diag_;
};

// y in ZA, decided through the Smith form of A itself.
bool lattice_membership(const SnfResult& snf, std::span<const std::int64_t> y);
bool lattice_membership(const IntMat& A, std::span<const std::int64_t> y);

// Sum of entries divisible by T - 1.
bool residue_test(std::span<const std::int64_t> y, std::int64_t T);

// Basis of the integer kernel, read off the columns of V beyond the rank.
std::vector<IntVec> kernel_lattice_basis(const IntMat& A);
std::vector<IntVec> kernel_lattice_basis(const SnfResult& snf);

IntMat inverse_unimodular(const IntMat& U);

}  // namespace thmc
