#include "vergen/region.hpp"

#include "vergen/error.hpp"

#include <algorithm>

namespace vergen {

namespace {

/// Q intersected with aff(R), as intrinsic halfspaces; nullopt if empty there.
std::optional<std::vector<HalfSpace>> restricted(const AffineHull& aff, const Polytope& q) {
    require(q.ambient_dim() == aff.ambient_dim(), ErrorKind::DimensionMismatch, "piece dimension differs");
    std::vector<HalfSpace> out;
    for (const auto& h : q.halfspaces()) {
        HalfSpace r = aff.restrict(h);
        if (is_zero(r.normal)) {
            if (sgn(r.offset) < 0) return std::nullopt;
            continue;
        }
        out.push_back(canonical(std::move(r)));
    }
    std::sort(out.begin(), out.end(), halfspace_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool misses(const Body& cell, const std::vector<HalfSpace>& hs) {
    for (const auto& h : hs) {
        bool outside = true;
        for (const auto& v : cell.vertices) {
            if (sgn(h.slack(v)) < 0) {
                outside = false;
                break;
            }
        }
        if (outside) return true;
    }
    return false;
}

bool point_inside(const std::vector<HalfSpace>& hs, const Point& t) {
    return std::all_of(hs.begin(), hs.end(), [&](const HalfSpace& h) { return h.contains(t); });
}

// Appends cell minus the polyhedron hs to out.
void clip(const Body& cell, const std::vector<HalfSpace>& hs, std::vector<Body>& out) {
    if (cell.dim == 0) {
        if (!point_inside(hs, cell.vertices[0])) out.push_back(cell);
        return;
    }
    if (misses(cell, hs)) {
        out.push_back(cell);
        return;
    }
    std::vector<Body> pieces;
    Body current = cell;
    for (const auto& h : hs) {
        SplitResult s = split(current, h);
        if (!s.below) {
            // Only a lower-dimensional part of the cell lies in the piece.
            out.push_back(cell);
            return;
        }
        if (s.above) pieces.push_back(std::move(*s.above));
        current = std::move(*s.below);
    }
    for (auto& p : pieces) out.push_back(std::move(p));
}

}  // namespace

Region Region::of(const Polytope& p) {
    Region r(p.affine_hull());
    r.cells_.push_back(p.body());
    return r;
}

void Region::add_cell(Body cell) {
    require(cell.dim == aff_.dim(), ErrorKind::DimensionMismatch, "cell dimension differs from region");
    cells_.push_back(std::move(cell));
}

Polytope Region::cell(std::size_t i) const { return Polytope::from_intrinsic(aff_, cells_.at(i)); }

Scalar Region::volume() const {
    Scalar v = 0;
    for (const auto& c : cells_) v += c.volume();
    return v;
}

std::optional<Point> Region::interior_point() const {
    if (cells_.empty()) return std::nullopt;
    return aff_.from_intrinsic(cells_.front().interior_point());
}

bool Region::contains(const Point& x) const {
    if (!aff_.contains(x)) return false;
    const Point t = aff_.to_intrinsic(x);
    return std::any_of(cells_.begin(), cells_.end(), [&](const Body& b) { return b.contains(t); });
}

std::optional<Polytope> Region::as_convex() const {
    if (cells_.empty()) return std::nullopt;
    std::vector<Point> pts;
    for (const auto& c : cells_)
        for (const auto& v : c.vertices) pts.push_back(aff_.from_intrinsic(v));
    Polytope h = convex_hull(std::move(pts));
    if (h.dim() != static_cast<int>(aff_.dim()) || h.body().volume() != volume()) return std::nullopt;
    return h;
}

Region subtract(const Region& r, const Polytope& q, std::size_t cell_budget) {
    Region out(r.affine_hull());
    auto hs = restricted(r.affine_hull(), q);
    if (!hs) return r;
    std::vector<Body> cells;
    for (const auto& c : r.cells()) {
        clip(c, *hs, cells);
        if (cells.size() > cell_budget) fail(ErrorKind::Budget, "region cell budget exceeded");
    }
    for (auto& c : cells) out.add_cell(std::move(c));
    return out;
}

Region intersect(const Region& r, const Polytope& q) {
    Region out(r.affine_hull());
    auto hs = restricted(r.affine_hull(), q);
    if (!hs) return out;
    for (const auto& c : r.cells()) {
        if (c.dim == 0) {
            if (point_inside(*hs, c.vertices[0])) out.add_cell(c);
            continue;
        }
        if (misses(c, *hs)) continue;
        std::optional<Body> current = c;
        for (const auto& h : *hs) {
            current = split(*current, h).below;
            if (!current) break;
        }
        if (current) out.add_cell(std::move(*current));
    }
    return out;
}

CoverResult covers(const Polytope& p, const std::vector<Polytope>& pieces, std::size_t cell_budget) {
    Region residual = Region::of(p);
    for (const auto& q : pieces) {
        residual = subtract(residual, q, cell_budget);
        if (residual.empty()) break;
    }
    CoverResult out{residual.empty(), std::nullopt, residual};
    if (out.covered) return out;

    // Residual cells avoid the interiors of the pieces; pieces of lower
    // dimension may still pass through a particular candidate point.
    const AffineHull& aff = residual.affine_hull();
    auto outside_all = [&](const Point& x) {
        return std::none_of(pieces.begin(), pieces.end(), [&](const Polytope& q) { return q.contains(x); });
    };
    for (const auto& cell : residual.cells()) {
        const Point c = cell.interior_point();
        std::vector<Point> candidates{c};
        for (int k = 1; k <= 8; ++k) {
            for (const auto& v : cell.vertices) candidates.push_back(lerp(c, v, Scalar(1, k + 2)));
        }
        for (const auto& t : candidates) {
            if (!cell.contains_strictly(t) && cell.dim > 0) continue;
            Point x = aff.from_intrinsic(t);
            if (outside_all(x)) {
                out.witness = std::move(x);
                return out;
            }
        }
    }
    fail(ErrorKind::Internal, "no witness found in a nonempty residual");
}

}  // namespace vergen
