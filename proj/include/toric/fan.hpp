#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toric/common.hpp"

namespace toric {

using Ray = std::vector<std::int64_t>;
using Divisor = std::vector<std::int64_t>;  // one coefficient per ray

/// Simplicial fan given by primitive ray generators and maximal cones
/// (each a sorted list of ray indices of size dim).
struct Fan {
  int dim = 0;
  std::vector<Ray> rays;
  std::vector<std::vector<int>> max_cones;
};

/// Validation outcome. pseudo_manifold is a completeness proxy (every facet
/// shared by exactly two maximal cones, connected adjacency graph), not a
/// support-coverage proof.
struct FanCheck {
  bool smooth = false;
  bool pseudo_manifold = false;
  std::vector<std::string> errors;

  bool ok() const { return errors.empty() && smooth && pseudo_manifold; }
};

FanCheck validate_fan(const Fan& fan);

/// Throws Error unless validate_fan(fan).ok().
void require_valid(const Fan& fan);

/// Minimal non-faces (subsets of rays spanning no cone, minimal under
/// inclusion), each sorted; ordered by (size, lexicographic).
/// Bounded by max_rays_bound().
std::vector<std::vector<int>> primitive_collections(const Fan& fan);

/// All size-dim subsets containing no primitive collection, in lexicographic
/// order. Enumerates the smaller of subsets/complements, so large ray counts
/// with small corank stay cheap.
std::vector<std::vector<int>> maximal_cones_from_primitives(
    int ray_count, int dim, const std::vector<std::vector<int>>& prims);

}  // namespace toric
