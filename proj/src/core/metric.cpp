#include "vergen/metric.hpp"

#include "vergen/error.hpp"
#include "vergen/linalg.hpp"

#include <optional>

namespace vergen {

namespace {

// Orthogonal projection of x onto the affine hull of pts.
Point project(const std::vector<Point>& pts, const Point& x) {
    Matrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
    const Matrix b = rref(std::move(diffs), x.size()).rows;
    if (b.empty()) return pts[0];
    Matrix gram(b.size(), Point(b.size()));
    Point rhs(b.size());
    const Point r = x - pts[0];
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) gram[i][j] = dot(b[i], b[j]);
        rhs[i] = dot(b[i], r);
    }
    const Point c = *solve(std::move(gram), std::move(rhs));
    Point out = pts[0];
    for (std::size_t i = 0; i < b.size(); ++i) out += c[i] * b[i];
    return out;
}

}  // namespace

Point nearest_point(const Polytope& p, const Point& x) {
    require(x.size() == p.ambient_dim(), ErrorKind::DimensionMismatch, "point dimension differs from polytope");
    if (p.contains(x)) return x;
    // The nearest point lies in the relative interior of some face and is
    // the projection onto that face's affine hull.
    std::optional<Point> best;
    Scalar best_d;
    for (const auto& f : p.faces()) {
        std::vector<Point> pts;
        for (auto v : f.vertex_ids) pts.push_back(p.vertices()[v]);
        Point y = project(pts, x);
        if (!p.contains(y)) continue;
        Scalar d = squared_distance(x, y);
        if (!best || d < best_d) {
            best_d = d;
            best = std::move(y);
        }
    }
    require(best.has_value(), ErrorKind::Internal, "no face projection found");
    return *best;
}

Scalar distance_sq(const Polytope& p, const Point& x) { return squared_distance(x, nearest_point(p, x)); }

Scalar hausdorff_sq(const Polytope& p, const Polytope& q) {
    require(p.ambient_dim() == q.ambient_dim(), ErrorKind::DimensionMismatch, "polytopes of different dimensions");
    Scalar h = 0;
    for (const auto& v : p.vertices()) h = std::max(h, distance_sq(q, v));
    for (const auto& w : q.vertices()) h = std::max(h, distance_sq(p, w));
    return h;
}

Scalar dF_sq(const Polytope& p, const Polytope& q) {
    require(p.ambient_dim() == q.ambient_dim(), ErrorKind::DimensionMismatch, "polytopes of different dimensions");
    auto one_side = [](const std::vector<Point>& a, const std::vector<Point>& b) {
        Scalar worst = 0;
        for (const auto& x : a) {
            Scalar m = squared_distance(x, b[0]);
            for (std::size_t i = 1; i < b.size(); ++i) m = std::min(m, squared_distance(x, b[i]));
            worst = std::max(worst, m);
        }
        return worst;
    };
    return std::max(one_side(p.vertices(), q.vertices()), one_side(q.vertices(), p.vertices()));
}

}  // namespace vergen
