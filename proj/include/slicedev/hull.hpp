#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "slicedev/polytope.hpp"

namespace slicedev {

struct HullDegenerate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Canonical test solids.
Polytope make_cube();         // unit cube [0,1]^3
Polytope make_tetrahedron();  // regular tetrahedron on alternating cube corners

// Hull facets of points in convex position, as outward-oriented triangles
// in a deterministic order. Throws HullDegenerate on coplanar/collinear
// samples or points interior to the hull. Exhaustive facet search: fine
// for the <= 50 point hulls the generator produces.
std::vector<std::vector<int>> convex_hull_faces(const std::vector<Vec3>& points);

// Hull of `npoints` points drawn on the unit sphere. Degenerate samples
// are redrawn from a derived seed; deterministic for a fixed seed.
Polytope random_hull(int npoints, std::uint64_t seed);

}  // namespace slicedev
