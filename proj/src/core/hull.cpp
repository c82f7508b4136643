// Convex hull of a point set spanning R^d, producing a Body.
//
// d = 1: extremes. d = 2: monotone chain. d >= 3: beneath-beyond over a
// simplicial boundary, then coplanar simplices are merged into facets and
// each facet is re-hulled one dimension down to drop non-extreme points.

#include "vergen/body.hpp"
#include "vergen/error.hpp"
#include "vergen/linalg.hpp"

#include <algorithm>
#include <map>

namespace vergen {

namespace {

Scalar cross2(const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Body hull_1d(std::vector<Point> pts) {
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(), lex_less);
    std::vector<HalfSpace> facets{HalfSpace{Point{1}, (*hi)[0]}, HalfSpace{Point{-1}, -(*lo)[0]}};
    return Body::assemble(1, std::move(facets), {*lo, *hi});
}

Body hull_2d(std::vector<Point> pts) {
    // pts sorted and unique
    std::vector<Point> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && sgn(cross2(h[k - 2], h[k - 1], pts[i])) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && sgn(cross2(h[k - 2], h[k - 1], pts[i - 1])) <= 0) --k;
        h[k++] = pts[i - 1];
    }
    h.resize(k - 1);  // counter-clockwise, no repeated start
    std::vector<HalfSpace> facets;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const Point& p = h[i];
        const Point& q = h[(i + 1) % h.size()];
        Point n{q[1] - p[1], p[0] - q[0]};
        Scalar off = dot(n, p);
        facets.push_back(HalfSpace{std::move(n), std::move(off)});
    }
    return Body::assemble(2, std::move(facets), std::move(h));
}

struct Simplex {
    std::vector<int> ids;  // d point indices, sorted
    HalfSpace plane;
    bool alive = true;
};

HalfSpace plane_through(const std::vector<Point>& pts, const std::vector<int>& ids, const Point& inside) {
    const std::size_t d = pts[0].size();
    Matrix m;
    for (std::size_t i = 1; i < ids.size(); ++i) m.push_back(pts[ids[i]] - pts[ids[0]]);
    auto ns = nullspace(m, d);
    if (ns.size() != 1) fail(ErrorKind::Internal, "hull: degenerate simplex");
    HalfSpace h{ns[0], dot(ns[0], pts[ids[0]])};
    if (sgn(h.slack(inside)) > 0) h = flipped(h);
    return h;
}

Body hull_general(std::vector<Point> pts) {
    const std::size_t d = pts[0].size();

    // Initial simplex: greedily pick affinely independent points.
    std::vector<int> base{0};
    {
        Matrix diffs;
        for (std::size_t i = 1; i < pts.size() && base.size() < d + 1; ++i) {
            Matrix trial = diffs;
            trial.push_back(pts[i] - pts[0]);
            if (rank(trial, d) == static_cast<int>(trial.size())) {
                diffs = std::move(trial);
                base.push_back(static_cast<int>(i));
            }
        }
        if (base.size() != d + 1) fail(ErrorKind::Internal, "hull: points do not span the space");
    }
    std::vector<Point> basepts;
    for (int i : base) basepts.push_back(pts[i]);
    const Point inside = centroid(basepts);

    std::vector<Simplex> simplices;
    for (std::size_t skip = 0; skip <= d; ++skip) {
        std::vector<int> ids;
        for (std::size_t i = 0; i <= d; ++i)
            if (i != skip) ids.push_back(base[i]);
        std::sort(ids.begin(), ids.end());
        HalfSpace h = plane_through(pts, ids, inside);
        simplices.push_back(Simplex{std::move(ids), std::move(h)});
    }

    std::vector<bool> in_base(pts.size(), false);
    for (int i : base) in_base[i] = true;
    for (std::size_t p = 0; p < pts.size(); ++p) {
        if (in_base[p]) continue;
        std::vector<std::size_t> visible;
        for (std::size_t f = 0; f < simplices.size(); ++f)
            if (simplices[f].alive && sgn(simplices[f].plane.slack(pts[p])) > 0) visible.push_back(f);
        if (visible.empty()) continue;

        std::map<std::vector<int>, int> ridge_count;
        for (auto f : visible) {
            const auto& ids = simplices[f].ids;
            for (std::size_t drop = 0; drop < ids.size(); ++drop) {
                std::vector<int> ridge;
                for (std::size_t i = 0; i < ids.size(); ++i)
                    if (i != drop) ridge.push_back(ids[i]);
                ++ridge_count[ridge];
            }
            simplices[f].alive = false;
        }
        for (auto& [ridge, count] : ridge_count) {
            if (count != 1) continue;
            std::vector<int> ids = ridge;
            ids.push_back(static_cast<int>(p));
            std::sort(ids.begin(), ids.end());
            HalfSpace h = plane_through(pts, ids, inside);
            simplices.push_back(Simplex{std::move(ids), std::move(h)});
        }
    }

    // Merge coplanar simplices into facets.
    std::map<std::pair<Point, Scalar>, std::vector<int>> groups;
    for (const auto& s : simplices) {
        if (!s.alive) continue;
        HalfSpace c = canonical(s.plane);
        auto& g = groups[{c.normal, c.offset}];
        g.insert(g.end(), s.ids.begin(), s.ids.end());
    }

    std::vector<HalfSpace> facets;
    std::vector<Point> vertices;
    for (auto& [key, ids] : groups) {
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        // Drop the coordinate along which the facet plane is a graph.
        std::size_t drop = 0;
        while (sgn(key.first[drop]) == 0) ++drop;
        std::vector<Point> projected;
        for (int i : ids) {
            Point q;
            for (std::size_t c = 0; c < d; ++c)
                if (c != drop) q.push_back(pts[i][c]);
            projected.push_back(std::move(q));
        }
        Body facet = Body::from_points(projected);
        for (int i : ids) {
            Point q;
            for (std::size_t c = 0; c < d; ++c)
                if (c != drop) q.push_back(pts[i][c]);
            if (std::binary_search(facet.vertices.begin(), facet.vertices.end(), q, lex_less)) vertices.push_back(pts[i]);
        }
        facets.push_back(HalfSpace{key.first, key.second});
    }
    return Body::assemble(d, std::move(facets), std::move(vertices));
}

}  // namespace

Body Body::from_points(std::vector<Point> points) {
    require(!points.empty(), ErrorKind::EmptyInput, "hull of an empty point set");
    const std::size_t d = points[0].size();
    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (d == 0) return Body::assemble(0, {}, {Point{}});
    if (d == 1) return hull_1d(std::move(points));
    if (d == 2) return hull_2d(std::move(points));
    return hull_general(std::move(points));
}

}  // namespace vergen
