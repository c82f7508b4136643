#pragma once

#include "vergen/polytope.hpp"

namespace vergen {

/**
 * Finitely generated polyhedral cone apex + cone(generators), with the
 * equivalent homogeneous halfspace description {y : <a_i, y - apex> <= 0}.
 */
struct Cone {
    Point apex;
    std::vector<Point> generators;
    std::vector<HalfSpace> halfspaces;  ///< offsets relative to the apex (zero)

    std::size_t dim() const { return apex.size(); }

    /// Membership via the halfspace description.
    bool contains(const Point& y) const;
    bool contains_interior(const Point& y) const;

    /// Membership via the generators (LP over nonnegative multipliers).
    bool generated_contains(const Point& y) const;
};

/// N_P(F) for the face with index `face` in p.faces().
Cone normal_cone(const Polytope& p, std::size_t face);

/// N_P(F) for a face given as a polytope; throws Precondition if F is not a face.
Cone normal_cone(const Polytope& p, const Polytope& f);

}  // namespace vergen
