#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "thmc/design.hpp"
#include "thmc/types.hpp"

namespace thmc {

struct HilbertRange {
  int min_T = 2;
  int max_T = 0;
};

// Default T ranges accepted by hilbert_basis: C 4..9, D 4..15, A/B small.
HilbertRange default_hilbert_range(Model model, int S);

struct HilbertOptions {
  bool enforce_range = true;
  std::optional<HilbertRange> range;  // overrides the default
};

struct HilbertBasisResult {
  Model model = Model::D;
  int S = 0;
  int T = 0;
  std::vector<IntVec> elements;  // sorted
  bool normal = false;
  std::size_t simplices = 0;
  std::size_t candidates = 0;
};

// Hilbert basis of cone(A) with respect to the lattice ZA.
HilbertBasisResult hilbert_basis(Model model, int S, int T, const HilbertOptions& options = {});

// The same computation for an arbitrary generating set; elements are
// relative to the lattice the generators span.
std::vector<IntVec> hilbert_basis_of(std::span<const IntVec> generators, std::size_t* simplices = nullptr,
                                     std::size_t* candidates = nullptr);

// Direct search: every y in ZA and cone(A) with degree <= degree_cap, then
// the irreducible ones. Only meant for small instances.
std::vector<IntVec> hilbert_basis_bruteforce_oracle(Model model, int S, int T, int degree_cap);

// Degree of y: its entry sum over the column sum.
std::int64_t hilbert_degree(Model model, int T, std::span<const std::int64_t> y);

bool check_normality(Model model, int S, int T, const HilbertOptions& options = {});

struct NonNormalityWitness {
  Model model = Model::A;
  int S = 0;
  int T = 0;
  IntVec h;
  std::vector<std::pair<Word, Rational>> rational_combination;
  std::vector<std::pair<Word, std::int64_t>> lattice_combination;
  bool in_cone = false;
  bool in_lattice = false;
  bool not_in_semigroup = false;
  bool verified() const { return in_cone && in_lattice && not_in_semigroup; }
};

// Builds the explicit witness and verifies all three properties; throws
// witness_verification_failed if any of them does not hold.
NonNormalityWitness nonnormality_witness(Model model, int S, int T);

// Whether h = A x has a non-negative integer solution (exhaustive over multisets of distinct columns).
bool in_semigroup(Model model, int S, int T, std::span<const std::int64_t> h);

nlohmann::ordered_json hilbert_to_json(const HilbertBasisResult& r);
std::string vectors_to_csv(const std::vector<IntVec>& vectors);

}  // namespace thmc
