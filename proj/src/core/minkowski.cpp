#include "vergen/minkowski.hpp"

#include "vergen/cone.hpp"
#include "vergen/error.hpp"
#include "vergen/lp.hpp"

namespace vergen {

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
    require(p.ambient_dim() == q.ambient_dim(), ErrorKind::DimensionMismatch, "Minkowski sum of different dimensions");
    std::vector<Point> sums;
    sums.reserve(p.vertex_count() * q.vertex_count());
    for (const auto& v : p.vertices())
        for (const auto& w : q.vertices()) sums.push_back(v + w);
    return convex_hull(std::move(sums));
}

Polytope add_segment(const Polytope& p, const Segment& s) {
    require(s.a.size() == p.ambient_dim() && s.b.size() == p.ambient_dim(), ErrorKind::DimensionMismatch,
            "segment dimension differs from polytope");
    if (s.a == s.b) return p.translated(s.a);
    return minkowski_sum(p, convex_hull({s.a, s.b}));
}

Polytope zonotope_to_polytope(const Zonotope& z) {
    Polytope acc = convex_hull({z.center});
    for (const auto& g : z.generators) {
        require(g.size() == z.dim(), ErrorKind::DimensionMismatch, "generator dimension differs from center");
        if (is_zero(g)) continue;
        acc = add_segment(acc, Segment{-g, g});
    }
    return acc;
}

Zonotope operator+(const Zonotope& a, const Zonotope& b) {
    require(a.dim() == b.dim(), ErrorKind::DimensionMismatch, "zonotopes of different dimensions");
    Zonotope z{a.center + b.center, a.generators};
    z.generators.insert(z.generators.end(), b.generators.begin(), b.generators.end());
    return z;
}

Polytope linear_image(const Polytope& p, const Matrix& a) {
    const std::size_t n = p.ambient_dim();
    require(a.size() == n, ErrorKind::DimensionMismatch, "matrix size differs from polytope dimension");
    for (const auto& row : a) require(row.size() == n, ErrorKind::DimensionMismatch, "matrix must be square");
    require(sgn(determinant(a)) != 0, ErrorKind::InvalidArgument, "linear map is singular");
    std::vector<Point> img;
    img.reserve(p.vertex_count());
    for (const auto& v : p.vertices()) img.push_back(apply(a, v));
    return convex_hull(std::move(img));
}

Polytope reflect(const Polytope& p) {
    Matrix m = identity(p.ambient_dim());
    for (auto& row : m) row = -row;
    return linear_image(p, m);
}

SegmentFace face_after_segment_sum(const Polytope& p, const Polytope& f, const Point& theta, const Scalar& c) {
    require(sgn(c) > 0, ErrorKind::InvalidArgument, "segment scale must be positive");
    require(theta.size() == p.ambient_dim(), ErrorKind::DimensionMismatch, "direction dimension differs");
    require(!is_zero(theta), ErrorKind::InvalidArgument, "direction must be nonzero");
    const Cone cone = normal_cone(p, f);

    // max <u, theta> over u in N_P(F), capped at 1.
    std::vector<HalfSpace> cons = cone.halfspaces;
    cons.push_back(HalfSpace{theta, 1});
    const LpResult r = lp_maximize(theta, cons);
    require(r.status == LpStatus::Optimal && sgn(r.value) > 0, ErrorKind::Precondition,
            "direction enters the polytope from the face");

    // Push u into the relative interior of the cone so that F_u(P) = F.
    Point rel = zero_point(p.ambient_dim());
    for (const auto& g : cone.generators) rel += g;
    const Scalar along = dot(rel, theta);
    const Scalar delta = sgn(along) >= 0 ? Scalar(1) : Scalar(r.value / (Scalar(-2) * along));
    Point u = r.witness + delta * rel;

    const Point shift = c * theta;
    const Polytope sum = add_segment(p, Segment{-shift, shift});
    Polytope moved = f.translated(shift);
    const SupportResult s = support(sum, u);
    require(s.face == moved, ErrorKind::Verification, "translated face is not the support face of the sum");
    return SegmentFace{std::move(moved), std::move(u)};
}

}  // namespace vergen
