#include <algorithm>
#include <unordered_set>

#include "thmc/polyhedra.hpp"

namespace thmc {

// Faces are vertex sets. The facets of a face F are the inclusion-maximal
// proper non-empty sets F & H over the polytope's facets H.
FVector f_vector_from_incidence(std::size_t vertices, const std::vector<DynBitset>& facets, int dimension) {
  require(dimension >= 1, ErrorCode::invalid_dimension, "polytope dimension must be positive");
  FVector out;
  out.dimension = dimension;
  out.f.assign(static_cast<std::size_t>(dimension), 0);
  std::vector<DynBitset> level;
  {
    std::unordered_set<DynBitset, DynBitsetHash> seen;
    for (const auto& f : facets)
      if (seen.insert(f).second) level.push_back(f);
  }
  out.f[static_cast<std::size_t>(dimension - 1)] = static_cast<std::int64_t>(level.size());
  for (int d = dimension - 2; d >= 0; --d) {
    std::unordered_set<DynBitset, DynBitsetHash> next;
    for (const auto& face : level) {
      const std::size_t size = face.count();
      std::vector<DynBitset> candidates;
      for (const auto& h : facets) {
        DynBitset c = face & h;
        const std::size_t n = c.count();
        if (n == 0 || n == size) continue;
        candidates.push_back(std::move(c));
      }
      std::sort(candidates.begin(), candidates.end(),
                [](const DynBitset& a, const DynBitset& b) { return a.count() > b.count(); });
      std::vector<DynBitset> maximal;
      for (auto& c : candidates) {
        bool dominated = false;
        for (const auto& m : maximal) {
          if (c.is_subset_of(m)) {
            dominated = true;
            break;
          }
        }
        if (!dominated) maximal.push_back(std::move(c));
      }
      for (auto& m : maximal) next.insert(std::move(m));
    }
    level.assign(next.begin(), next.end());
    out.f[static_cast<std::size_t>(d)] = static_cast<std::int64_t>(level.size());
  }
  require(out.f[0] == static_cast<std::int64_t>(vertices), ErrorCode::internal, "vertex count disagrees with face lattice");
  return out;
}

}  // namespace thmc
