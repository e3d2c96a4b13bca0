#pragma once

#include "geodesic/geometry.hpp"

namespace fixtures {

using geodesic::Point;
using geodesic::PolygonDomain;

inline PolygonDomain unit_square() { return PolygonDomain::create({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

inline PolygonDomain square_with_hole() {
    return PolygonDomain::create({{0, 0}, {10, 0}, {10, 10}, {0, 10}}, {{{4, 4}, {4, 6}, {6, 6}, {6, 4}}});
}

inline PolygonDomain big_square() { return PolygonDomain::create({{0, 0}, {10, 0}, {10, 10}, {0, 10}}); }

inline PolygonDomain triangle() { return PolygonDomain::create({{0, 0}, {4, 0}, {1, 3}}); }

}  // namespace fixtures
