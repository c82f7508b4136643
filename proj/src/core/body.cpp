#include "vergen/body.hpp"

#include "vergen/error.hpp"
#include "vergen/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace vergen {

namespace {

bool spans_facet(const std::vector<Point>& pts, std::size_t dim) {
    if (pts.size() < dim) return false;
    // In dimension <= 3 the tight vertices of a supporting hyperplane are the
    // vertices of a face; a face with >= dim vertices is a facet there.
    if (dim <= 3) return true;
    return affine_rank(pts) == static_cast<int>(dim) - 1;
}

Scalar factorial(std::size_t k) {
    Scalar f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= static_cast<unsigned long>(i);
    return f;
}

}  // namespace

Body Body::assemble(std::size_t dim, std::vector<HalfSpace> facets, std::vector<Point> vertices) {
    Body b;
    b.dim = dim;
    std::sort(vertices.begin(), vertices.end(), lex_less);
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

    for (auto& f : facets) f = canonical(std::move(f));
    std::sort(facets.begin(), facets.end(), halfspace_less);
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    std::vector<HalfSpace> kept;
    std::vector<std::vector<std::size_t>> tight;
    for (auto& f : facets) {
        std::vector<Point> on;
        std::vector<std::size_t> ids;
        for (std::size_t v = 0; v < vertices.size(); ++v) {
            if (sgn(f.slack(vertices[v])) == 0) {
                on.push_back(vertices[v]);
                ids.push_back(v);
            }
        }
        if (!spans_facet(on, dim)) continue;
        kept.push_back(std::move(f));
        tight.push_back(std::move(ids));
    }

    b.incidence.assign(vertices.size(), IndexSet(kept.size()));
    for (std::size_t j = 0; j < kept.size(); ++j)
        for (auto v : tight[j]) b.incidence[v].set(j);
    b.facets = std::move(kept);
    b.vertices = std::move(vertices);
    return b;
}

bool Body::contains(const Point& x) const {
    return std::all_of(facets.begin(), facets.end(), [&](const HalfSpace& h) { return sgn(h.slack(x)) <= 0; });
}

bool Body::contains_strictly(const Point& x) const {
    return std::all_of(facets.begin(), facets.end(), [&](const HalfSpace& h) { return sgn(h.slack(x)) < 0; });
}

Point Body::interior_point() const { return centroid(vertices); }

Body Body::scaled(const Scalar& scale, const Point& shift) const {
    require(sgn(scale) > 0, ErrorKind::InvalidArgument, "body scale must be positive");
    Body r = *this;
    for (auto& f : r.facets) f.offset = scale * f.offset + dot(f.normal, shift);
    for (auto& v : r.vertices) {
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = scale * v[i] + shift[i];
    }
    return r;
}

IndexSet Body::facet_vertices(std::size_t j) const {
    IndexSet s(vertices.size());
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (incidence[v].test(j)) s.set(v);
    return s;
}

IndexSet Body::face_closure(const IndexSet& vertex_ids) const {
    IndexSet common(facets.size());
    bool first = true;
    for (auto v : vertex_ids.members()) {
        if (first) {
            common = incidence[v];
            first = false;
        } else {
            common = common & incidence[v];
        }
    }
    IndexSet out(vertices.size());
    if (first) {
        for (std::size_t v = 0; v < vertices.size(); ++v) out.set(v);
        return out;
    }
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (common.subset_of(incidence[v])) out.set(v);
    return out;
}

bool Body::adjacent(std::size_t u, std::size_t w) const {
    const IndexSet common = incidence[u] & incidence[w];
    if (common.count() + 1 < dim) return false;
    for (std::size_t z = 0; z < vertices.size(); ++z) {
        if (z == u || z == w) continue;
        if (common.subset_of(incidence[z])) return false;
    }
    return true;
}

Scalar Body::volume() const {
    if (dim == 0) return 1;
    if (dim == 1) return vertices.back()[0] - vertices.front()[0];

    // Recursive pulling triangulation: cone from the first vertex of a face
    // over the subfaces (face ∩ facet) of one dimension lower not containing it.
    std::map<IndexSet, int> dim_cache;
    auto face_dim = [&](const IndexSet& s) {
        auto it = dim_cache.find(s);
        if (it != dim_cache.end()) return it->second;
        std::vector<Point> pts;
        for (auto v : s.members()) pts.push_back(vertices[v]);
        const int d = affine_rank(pts);
        dim_cache.emplace(s, d);
        return d;
    };

    Scalar total = 0;
    std::vector<std::size_t> chain;
    auto recurse = [&](auto&& self, const IndexSet& face, int k) -> void {
        const auto members = face.members();
        if (k == 0) {
            chain.push_back(members.front());
            Matrix m;
            for (std::size_t i = 1; i < chain.size(); ++i) m.push_back(vertices[chain[i]] - vertices[chain[0]]);
            total += abs(determinant(std::move(m)));
            chain.pop_back();
            return;
        }
        const std::size_t apex = members.front();
        chain.push_back(apex);
        std::vector<IndexSet> seen;
        for (std::size_t j = 0; j < facets.size(); ++j) {
            IndexSet sub = face & facet_vertices(j);
            if (sub.test(apex) || sub.none()) continue;
            if (std::find(seen.begin(), seen.end(), sub) != seen.end()) continue;
            if (face_dim(sub) != k - 1) continue;
            seen.push_back(sub);
            self(self, sub, k - 1);
        }
        chain.pop_back();
    };
    IndexSet all(vertices.size());
    for (std::size_t v = 0; v < vertices.size(); ++v) all.set(v);
    recurse(recurse, all, static_cast<int>(dim));
    return total / factorial(dim);
}

SplitResult split(const Body& body, const HalfSpace& cut) {
    const HalfSpace h = canonical(cut);
    std::vector<Scalar> s(body.vertices.size());
    bool any_neg = false, any_pos = false;
    for (std::size_t v = 0; v < body.vertices.size(); ++v) {
        s[v] = h.slack(body.vertices[v]);
        any_neg |= sgn(s[v]) < 0;
        any_pos |= sgn(s[v]) > 0;
    }
    SplitResult out;
    if (!any_pos) {
        out.below = body;
        return out;
    }
    if (!any_neg) {
        out.above = body;
        return out;
    }

    std::vector<Point> below, above;
    for (std::size_t v = 0; v < body.vertices.size(); ++v) {
        if (sgn(s[v]) <= 0) below.push_back(body.vertices[v]);
        if (sgn(s[v]) >= 0) above.push_back(body.vertices[v]);
    }
    for (std::size_t u = 0; u < body.vertices.size(); ++u) {
        if (sgn(s[u]) >= 0) continue;
        for (std::size_t w = 0; w < body.vertices.size(); ++w) {
            if (sgn(s[w]) <= 0 || !body.adjacent(u, w)) continue;
            const Scalar t = s[u] / (s[u] - s[w]);
            Point p = lerp(body.vertices[u], body.vertices[w], t);
            below.push_back(p);
            above.push_back(std::move(p));
        }
    }

    std::vector<HalfSpace> fb = body.facets, fa = body.facets;
    fb.push_back(h);
    fa.push_back(flipped(h));
    out.below = Body::assemble(body.dim, std::move(fb), std::move(below));
    out.above = Body::assemble(body.dim, std::move(fa), std::move(above));
    return out;
}

}  // namespace vergen
