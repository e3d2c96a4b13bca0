#pragma once

#include <cstdint>

#include "geodesic/geometry.hpp"

namespace geodesic {

/// Perturbed star-shaped outer polygon with axis-aligned rectangular holes
/// (triangular when the budget is too small for rectangles). Deterministic
/// per seed. Requires budget >= 3 + 3 * holes.
PolygonDomain random_domain(std::uint64_t seed, int vertex_budget, int holes);

}  // namespace geodesic
