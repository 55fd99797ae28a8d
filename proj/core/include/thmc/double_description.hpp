#pragma once

#include <span>
#include <vector>

#include "thmc/bitset.hpp"
#include "thmc/types.hpp"

namespace thmc {

// Facets of a full-dimensional cone cone(generators) in Z^k, as primitive
// normals n with n.g >= 0 for every generator. incidence[f] marks the
// generators lying on facet f. Normals come back lexicographically sorted.
struct DualRays {
  std::vector<IntVec> normals;
  std::vector<DynBitset> incidence;
};

DualRays double_description(std::span<const IntVec> generators);

// Exact rank of a set of integer vectors.
std::size_t vector_rank(std::span<const IntVec> vectors);

}  // namespace thmc
