#pragma once

#include "vergen/config.hpp"
#include "vergen/polytope.hpp"

#include <optional>

namespace vergen {

/**
 * Finite union of interior-disjoint full-dimensional cells living in a
 * common affine hull. Cells are Bodies in the hull's intrinsic coordinates.
 */
class Region {
public:
    explicit Region(AffineHull aff) : aff_(std::move(aff)) {}

    /// The single-cell region covering p inside its own affine hull.
    static Region of(const Polytope& p);

    const AffineHull& affine_hull() const { return aff_; }
    const std::vector<Body>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    void add_cell(Body cell);

    /// Cell i as an ambient polytope.
    Polytope cell(std::size_t i) const;

    Scalar volume() const;

    /// Some point in the interior of some cell.
    std::optional<Point> interior_point() const;

    bool contains(const Point& x) const;

    /// The region as one polytope when its union is convex.
    std::optional<Polytope> as_convex() const;

private:
    AffineHull aff_;
    std::vector<Body> cells_;
};

/**
 * Interior of the result equals int(R) minus Q. Pieces meeting the hull of
 * R in a lower-dimensional set leave R unchanged. Throws Budget if the cell
 * count exceeds `cell_budget`.
 */
Region subtract(const Region& r, const Polytope& q, std::size_t cell_budget = RunConfig{}.cell_budget);

/// Cell-wise intersection with a polytope (lower-dimensional parts dropped).
Region intersect(const Region& r, const Polytope& q);

struct CoverResult {
    bool covered = false;
    std::optional<Point> witness;  ///< in relint(P), outside every piece
    Region residual;
};

/**
 * Decides whether P minus the union of the pieces has empty interior
 * (relative to aff P). Because the pieces are closed and P is the closure
 * of its relative interior, this is the same as P being contained in the
 * union of the pieces.
 */
CoverResult covers(const Polytope& p, const std::vector<Polytope>& pieces,
                   std::size_t cell_budget = RunConfig{}.cell_budget);

}  // namespace vergen
