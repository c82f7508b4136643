#pragma once

#include "vergen/halfspace.hpp"
#include "vergen/linalg.hpp"

#include <span>
#include <vector>

namespace vergen {

/**
 * Affine hull of a point set, with intrinsic coordinates chosen as a subset
 * of the ambient coordinates (the pivot columns of the direction space).
 * The coordinate projection x -> x[pivots] is an affine bijection from the
 * hull onto R^dim, so convexity, faces and volume ratios carry over exactly.
 */
class AffineHull {
public:
    static AffineHull of(std::span<const Point> points);

    /// The whole space R^n.
    static AffineHull full(std::size_t n);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return pivots_.size(); }
    bool is_full() const { return dim() == ambient_; }

    const std::vector<std::size_t>& pivots() const { return pivots_; }
    /// x = origin + sum_k t_k * basis[k]
    const Point& origin() const { return origin_; }
    const Matrix& basis() const { return basis_; }
    /// Equalities <normal, x> = offset cutting out the hull.
    const std::vector<HalfSpace>& equations() const { return equations_; }

    Point to_intrinsic(const Point& x) const;
    Point from_intrinsic(const Point& t) const;
    /// Linear part only: maps an intrinsic direction to an ambient one.
    Point direction_from_intrinsic(const Point& t) const;

    bool contains(const Point& x) const;

    /// Ambient halfspace seen in intrinsic coordinates; the normal may vanish.
    HalfSpace restrict(const HalfSpace& h) const;
    /// Intrinsic halfspace as an ambient one (supported on the pivot coordinates).
    HalfSpace lift(const HalfSpace& h) const;

    bool operator==(const AffineHull& other) const = default;

private:
    std::size_t ambient_ = 0;
    std::vector<std::size_t> pivots_;
    Point origin_;
    Matrix basis_;
    std::vector<HalfSpace> equations_;
};

}  // namespace vergen
