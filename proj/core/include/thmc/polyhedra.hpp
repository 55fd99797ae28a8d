#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "thmc/bitset.hpp"
#include "thmc/lattice.hpp"
#include "thmc/types.hpp"

namespace thmc {

struct VRep {
  std::vector<IntVec> points;
};

// n.x >= 0 for every inequality and n.x = 0 for every equation.
struct HRep {
  std::vector<IntVec> inequalities;
  std::vector<IntVec> equations;
};

struct FVector {
  int dimension = 0;
  std::vector<std::int64_t> f;  // f_0 .. f_{dimension-1}

  std::int64_t euler_sum() const;
  bool satisfies_euler() const { return euler_sum() == 1 - ((dimension % 2 == 0) ? 1 : -1); }
  friend bool operator==(const FVector&, const FVector&) = default;
};

// cone(generators) described relative to its linear span.
struct ConeStructure {
  std::vector<IntVec> generators;  // distinct, sorted
  std::size_t ambient_dim = 0;
  std::size_t dimension = 0;
  HRep hrep;                          // ambient normals, sorted
  std::vector<DynBitset> incidence;   // per facet, over generators
  std::vector<std::size_t> extreme;   // generators spanning extreme rays
};

ConeStructure analyze_cone(std::span<const IntVec> generators);

// Deduplicated, sorted copy.
std::vector<IntVec> distinct_sorted(std::span<const IntVec> points);

// Vertices by per-point exact LP: a point is kept unless it is a convex
// combination of the remaining points.
VRep polytope_vertices(std::span<const IntVec> points);

HRep cone_facets(std::span<const IntVec> generators);

// f-vector of conv(points), faces of dimension 0 .. d-1.
FVector f_vector(std::span<const IntVec> points);

// Face counts from a vertex/facet incidence structure of a d-polytope.
FVector f_vector_from_incidence(std::size_t vertices, const std::vector<DynBitset>& facets, int dimension);

// Canonical key of an inequality on a cone: its values on the generators,
// divided by their gcd. Two normals define the same facet iff keys agree.
IntVec evaluation_key(std::span<const std::int64_t> normal, std::span<const IntVec> generators);

struct HyperplaneComparison {
  std::size_t computed = 0;
  std::size_t listed = 0;
  std::size_t matched = 0;
  std::size_t listed_invalid = 0;   // listed normals negative on some generator
  std::size_t listed_duplicates = 0;
  std::vector<IntVec> missing;      // computed facets not listed
  std::vector<IntVec> unexpected;   // listed normals that are not facets
  bool equal() const { return missing.empty() && unexpected.empty() && listed_duplicates == 0; }
};

// `listed` are compared against the facets in `computed` other than those in `omitted`.
HyperplaneComparison compare_hyperplanes(const std::vector<IntVec>& computed, const std::vector<IntVec>& listed,
                                         std::span<const IntVec> generators, const std::vector<IntVec>& omitted = {});

// Coordinate-hyperplane facets x_i >= 0 among `normals` (by evaluation key).
std::vector<IntVec> nonnegativity_facets(const std::vector<IntVec>& normals, std::span<const IntVec> generators);

nlohmann::ordered_json hrep_to_json(const HRep& h);
nlohmann::ordered_json vrep_to_json(const VRep& v);
nlohmann::ordered_json fvector_to_json(const FVector& f);
// One normal per column, rows = coordinates.
std::string normals_as_columns(const std::vector<IntVec>& normals);

}  // namespace thmc
