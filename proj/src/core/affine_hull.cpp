#include "vergen/affine_hull.hpp"

#include "vergen/error.hpp"

namespace vergen {

AffineHull AffineHull::of(std::span<const Point> points) {
    require(!points.empty(), ErrorKind::EmptyInput, "affine hull of an empty set");
    AffineHull a;
    a.ambient_ = points[0].size();
    Matrix diffs;
    for (const auto& p : points) {
        require(p.size() == a.ambient_, ErrorKind::DimensionMismatch, "points of different dimensions");
        diffs.push_back(p - points[0]);
    }
    RowEchelon e = rref(std::move(diffs), a.ambient_);
    a.basis_ = std::move(e.rows);
    for (int p : e.pivots) a.pivots_.push_back(static_cast<std::size_t>(p));

    // origin = base - sum_k base[pivot_k] * basis[k], so that intrinsic
    // coordinates are exactly the pivot entries.
    a.origin_ = points[0];
    for (std::size_t k = 0; k < a.basis_.size(); ++k) {
        const Scalar c = points[0][a.pivots_[k]];
        for (std::size_t j = 0; j < a.ambient_; ++j) a.origin_[j] -= c * a.basis_[k][j];
    }
    for (auto& n : nullspace(a.basis_, a.ambient_)) {
        HalfSpace eq = canonical(HalfSpace{n, dot(n, a.origin_)});
        a.equations_.push_back(std::move(eq));
    }
    return a;
}

AffineHull AffineHull::full(std::size_t n) {
    AffineHull a;
    a.ambient_ = n;
    a.origin_ = zero_point(n);
    a.basis_ = identity(n);
    for (std::size_t i = 0; i < n; ++i) a.pivots_.push_back(i);
    return a;
}

Point AffineHull::to_intrinsic(const Point& x) const {
    require(x.size() == ambient_, ErrorKind::DimensionMismatch, "point dimension does not match the affine hull");
    Point t(pivots_.size());
    for (std::size_t k = 0; k < pivots_.size(); ++k) t[k] = x[pivots_[k]];
    return t;
}

Point AffineHull::from_intrinsic(const Point& t) const {
    Point x = origin_;
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (sgn(t[k]) == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) x[j] += t[k] * basis_[k][j];
    }
    return x;
}

Point AffineHull::direction_from_intrinsic(const Point& t) const {
    Point x = zero_point(ambient_);
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (sgn(t[k]) == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) x[j] += t[k] * basis_[k][j];
    }
    return x;
}

bool AffineHull::contains(const Point& x) const {
    for (const auto& eq : equations_)
        if (sgn(eq.slack(x)) != 0) return false;
    return true;
}

HalfSpace AffineHull::restrict(const HalfSpace& h) const {
    Point a(pivots_.size());
    for (std::size_t k = 0; k < pivots_.size(); ++k) a[k] = dot(h.normal, basis_[k]);
    return HalfSpace{std::move(a), h.offset - dot(h.normal, origin_)};
}

HalfSpace AffineHull::lift(const HalfSpace& h) const {
    Point a = zero_point(ambient_);
    for (std::size_t k = 0; k < pivots_.size(); ++k) a[pivots_[k]] = h.normal[k];
    return HalfSpace{std::move(a), h.offset};
}

}  // namespace vergen
