#include "vergen/polytope.hpp"

#include "vergen/error.hpp"
#include "vergen/lp.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace vergen {

struct Polytope::Cache {
    std::once_flag faces_once;
    std::vector<Face> faces;
};

namespace {

Body point_body() {
    Body b;
    b.dim = 0;
    b.vertices.push_back(Point{});
    b.incidence.push_back(IndexSet(0));
    return b;
}

}  // namespace

Polytope Polytope::hull(std::vector<Point> points) {
    require(!points.empty(), ErrorKind::EmptyInput, "convex hull of an empty point set");
    const std::size_t n = points[0].size();
    for (const auto& p : points)
        require(p.size() == n, ErrorKind::DimensionMismatch, "points of different dimensions");
    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());

    AffineHull aff = AffineHull::of(points);
    if (aff.dim() == 0) return from_intrinsic(std::move(aff), point_body());
    std::vector<Point> local;
    local.reserve(points.size());
    for (const auto& p : points) local.push_back(aff.to_intrinsic(p));
    return from_intrinsic(std::move(aff), Body::from_points(std::move(local)));
}

Polytope Polytope::from_intrinsic(AffineHull aff, Body body) {
    require(body.dim == aff.dim(), ErrorKind::DimensionMismatch, "body dimension differs from affine hull");
    Polytope p;
    p.vertices_.reserve(body.vertices.size());
    for (const auto& t : body.vertices) p.vertices_.push_back(aff.from_intrinsic(t));
    p.aff_ = std::move(aff);
    p.body_ = std::move(body);
    p.cache_ = std::make_shared<Cache>();
    return p;
}

std::vector<HalfSpace> Polytope::facets() const {
    std::vector<HalfSpace> out;
    out.reserve(body_.facets.size());
    for (const auto& f : body_.facets) out.push_back(canonical(aff_.lift(f)));
    return out;
}

std::vector<HalfSpace> Polytope::halfspaces() const {
    std::vector<HalfSpace> out = facets();
    for (const auto& e : aff_.equations()) {
        out.push_back(e);
        out.push_back(canonical(flipped(e)));
    }
    return out;
}

bool Polytope::contains(const Point& x) const {
    require(x.size() == ambient_dim(), ErrorKind::DimensionMismatch, "point dimension differs from polytope");
    return aff_.contains(x) && body_.contains(aff_.to_intrinsic(x));
}

bool Polytope::contains_relint(const Point& x) const {
    require(x.size() == ambient_dim(), ErrorKind::DimensionMismatch, "point dimension differs from polytope");
    return aff_.contains(x) && body_.contains_strictly(aff_.to_intrinsic(x));
}

const std::vector<Face>& Polytope::faces() const {
    std::call_once(cache_->faces_once, [this] {
        const std::size_t m = vertices_.size();
        const int d = dim();
        IndexSet all(m);
        for (std::size_t v = 0; v < m; ++v) all.set(v);

        std::vector<std::set<IndexSet>> levels(static_cast<std::size_t>(d) + 1);
        levels[static_cast<std::size_t>(d)].insert(all);
        if (d > 0) {
            for (std::size_t j = 0; j < body_.facets.size(); ++j)
                levels[static_cast<std::size_t>(d) - 1].insert(body_.facet_vertices(j));
        }
        // A facet of a face F is F intersected with some facet of P.
        for (int k = d - 1; k >= 1; --k) {
            for (const auto& f : levels[static_cast<std::size_t>(k)]) {
                for (std::size_t j = 0; j < body_.facets.size(); ++j) {
                    IndexSet g = f & body_.facet_vertices(j);
                    if (g.none() || g == f) continue;
                    std::vector<Point> pts;
                    for (auto v : g.members()) pts.push_back(vertices_[v]);
                    if (affine_rank(pts) == k - 1) levels[static_cast<std::size_t>(k) - 1].insert(g);
                }
            }
        }
        if (d > 0) {
            levels[0].clear();
            for (std::size_t v = 0; v < m; ++v) {
                IndexSet s(m);
                s.set(v);
                levels[0].insert(s);
            }
        }

        std::vector<Face> out;
        for (int k = 0; k <= d; ++k) {
            std::vector<Face> level;
            for (const auto& s : levels[static_cast<std::size_t>(k)]) level.push_back(Face{k, s.members()});
            std::sort(level.begin(), level.end(),
                      [](const Face& a, const Face& b) { return a.vertex_ids < b.vertex_ids; });
            out.insert(out.end(), level.begin(), level.end());
        }
        cache_->faces = std::move(out);
    });
    return cache_->faces;
}

Polytope Polytope::sub(const std::vector<std::size_t>& vertex_ids) const {
    std::vector<Point> pts;
    pts.reserve(vertex_ids.size());
    for (auto v : vertex_ids) {
        require(v < vertices_.size(), ErrorKind::InvalidArgument, "vertex index out of range");
        pts.push_back(vertices_[v]);
    }
    return hull(std::move(pts));
}

Polytope Polytope::scaled(const Scalar& scale, const Point& shift) const {
    require(sgn(scale) > 0, ErrorKind::InvalidArgument, "scale must be positive");
    require(shift.size() == ambient_dim(), ErrorKind::DimensionMismatch, "shift dimension differs from polytope");
    std::vector<Point> moved;
    moved.reserve(vertices_.size());
    for (const auto& v : vertices_) moved.push_back(scale * v + shift);
    AffineHull aff = AffineHull::of(moved);
    Point local;
    for (auto i : aff.pivots()) local.push_back(shift[i]);
    return from_intrinsic(std::move(aff), body_.scaled(scale, local));
}

std::vector<Point> Polytope::sorted_vertices() const {
    std::vector<Point> out = vertices_;
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

bool Polytope::operator==(const Polytope& other) const {
    return ambient_dim() == other.ambient_dim() && sorted_vertices() == other.sorted_vertices();
}

// Double description on the homogenized cone {(x, t) : a.x - b t <= 0, t >= 0}.
std::optional<Polytope> h_to_v(const std::vector<HalfSpace>& halfspaces, std::size_t n) {
    Matrix rows;
    for (const auto& h : halfspaces) {
        require(h.normal.size() == n, ErrorKind::DimensionMismatch, "halfspace dimension differs");
        Point r = h.normal;
        r.push_back(-h.offset);
        rows.push_back(std::move(r));
    }
    {
        Point r = zero_point(n + 1);
        r[n] = -1;
        rows.push_back(std::move(r));
    }
    const std::size_t d = n + 1;

    if (rank(rows, d) < static_cast<int>(d)) {
        // The cone has a lineality space, hence the polyhedron a line.
        if (lp_feasible(halfspaces, n)) fail(ErrorKind::Unbounded, "halfspace system is unbounded");
        return std::nullopt;
    }

    // Initial simplicial cone from d independent rows.
    std::vector<std::size_t> basis_rows;
    Matrix chosen;
    for (std::size_t i = 0; i < rows.size() && basis_rows.size() < d; ++i) {
        Matrix trial = chosen;
        trial.push_back(rows[i]);
        if (rank(trial, d) == static_cast<int>(trial.size())) {
            chosen = std::move(trial);
            basis_rows.push_back(i);
        }
    }
    const Matrix inv = *inverse(chosen);

    auto normalize = [](Point r) {
        for (const auto& c : r) {
            if (sgn(c) != 0) {
                const Scalar s = abs(c);
                for (auto& x : r) x /= s;
                break;
            }
        }
        return r;
    };

    struct Ray {
        Point y;
        IndexSet zero;
    };
    std::vector<Ray> rays;
    std::vector<bool> processed(rows.size(), false);
    for (auto i : basis_rows) processed[i] = true;
    for (std::size_t j = 0; j < d; ++j) {
        Point y(d);
        for (std::size_t i = 0; i < d; ++i) y[i] = -inv[i][j];
        Ray r{normalize(std::move(y)), IndexSet(rows.size())};
        for (std::size_t k = 0; k < d; ++k)
            if (k != j) r.zero.set(basis_rows[k]);
        rays.push_back(std::move(r));
    }

    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (processed[i]) continue;
        processed[i] = true;
        std::vector<Scalar> val(rays.size());
        std::vector<std::size_t> pos, neg;
        std::vector<Ray> next;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = dot(rows[i], rays[r].y);
            const int s = sgn(val[r]);
            if (s > 0) {
                pos.push_back(r);
                continue;
            }
            if (s < 0) neg.push_back(r);
            Ray kept = rays[r];
            if (s == 0) kept.zero.set(i);
            next.push_back(std::move(kept));
        }
        for (auto p : pos) {
            for (auto q : neg) {
                const IndexSet common = rays[p].zero & rays[q].zero;
                if (common.count() + 2 < d) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r != p && r != q && common.subset_of(rays[r].zero)) adjacent = false;
                }
                if (!adjacent) continue;
                Point y = val[p] * rays[q].y - val[q] * rays[p].y;
                Ray nr{normalize(std::move(y)), common};
                nr.zero.set(i);
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
    }

    std::vector<Point> verts;
    bool recession = false;
    for (const auto& r : rays) {
        if (sgn(r.y[n]) == 0) {
            recession = true;
            continue;
        }
        Point x(n);
        for (std::size_t k = 0; k < n; ++k) x[k] = r.y[k] / r.y[n];
        verts.push_back(std::move(x));
    }
    if (verts.empty()) return std::nullopt;
    if (recession) fail(ErrorKind::Unbounded, "halfspace system is unbounded");
    return Polytope::hull(std::move(verts));
}

std::vector<HalfSpace> v_to_h(const Polytope& p) {
    std::vector<HalfSpace> out = p.halfspaces();
    std::sort(out.begin(), out.end(), halfspace_less);
    return out;
}

SupportResult support(const Polytope& p, const Point& u) {
    require(u.size() == p.ambient_dim(), ErrorKind::DimensionMismatch, "direction dimension differs");
    require(!is_zero(u), ErrorKind::InvalidArgument, "support direction must be nonzero");
    const auto& vs = p.vertices();
    Scalar best = dot(u, vs[0]);
    std::vector<std::size_t> ids{0};
    for (std::size_t i = 1; i < vs.size(); ++i) {
        const Scalar v = dot(u, vs[i]);
        const int c = cmp(v, best);
        if (c > 0) {
            best = v;
            ids.assign(1, i);
        } else if (c == 0) {
            ids.push_back(i);
        }
    }
    return SupportResult{best, ids, p.sub(ids)};
}

std::vector<std::size_t> faces_of_dim(const Polytope& p, int k) {
    std::vector<std::size_t> out;
    const auto& fs = p.faces();
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (fs[i].dim == k) out.push_back(i);
    return out;
}

std::vector<Polytope> k_skeleton(const Polytope& p, int k) {
    require(k >= 0 && k <= p.dim(), ErrorKind::InvalidArgument, "skeleton dimension out of range");
    std::vector<Polytope> out;
    for (auto i : faces_of_dim(p, k)) out.push_back(p.sub(p.faces()[i].vertex_ids));
    return out;
}

std::optional<Point> is_centrally_symmetric(const Polytope& p) {
    const Point c = p.center();
    const auto vs = p.sorted_vertices();
    for (const auto& v : vs) {
        const Point m = Scalar(2) * c - v;
        if (!std::binary_search(vs.begin(), vs.end(), m, lex_less)) return std::nullopt;
    }
    return c;
}

std::optional<std::size_t> find_face(const Polytope& p, const Polytope& f) {
    if (f.ambient_dim() != p.ambient_dim()) return std::nullopt;
    std::vector<std::size_t> ids;
    for (const auto& w : f.vertices()) {
        auto it = std::find(p.vertices().begin(), p.vertices().end(), w);
        if (it == p.vertices().end()) return std::nullopt;
        ids.push_back(static_cast<std::size_t>(it - p.vertices().begin()));
    }
    std::sort(ids.begin(), ids.end());
    const auto& fs = p.faces();
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (fs[i].vertex_ids == ids) return i;
    return std::nullopt;
}

}  // namespace vergen
