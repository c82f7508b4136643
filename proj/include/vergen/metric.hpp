#pragma once

#include "vergen/polytope.hpp"

namespace vergen {

/// Squared Euclidean distance from x to P.
Scalar distance_sq(const Polytope& p, const Point& x);

/// Nearest point of P to x.
Point nearest_point(const Polytope& p, const Point& x);

/// Squared Hausdorff distance between the polytopes.
Scalar hausdorff_sq(const Polytope& p, const Polytope& q);

/// Squared Hausdorff distance between the vertex sets.
Scalar dF_sq(const Polytope& p, const Polytope& q);

}  // namespace vergen
