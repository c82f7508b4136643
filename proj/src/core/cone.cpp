#include "vergen/cone.hpp"

#include "vergen/error.hpp"
#include "vergen/lp.hpp"

#include <algorithm>

namespace vergen {

bool Cone::contains(const Point& y) const {
    const Point d = y - apex;
    return std::all_of(halfspaces.begin(), halfspaces.end(),
                       [&](const HalfSpace& h) { return sgn(dot(h.normal, d)) <= 0; });
}

bool Cone::contains_interior(const Point& y) const {
    const Point d = y - apex;
    return std::all_of(halfspaces.begin(), halfspaces.end(),
                       [&](const HalfSpace& h) { return sgn(dot(h.normal, d)) < 0; });
}

bool Cone::generated_contains(const Point& y) const {
    const Point d = y - apex;
    if (generators.empty()) return is_zero(d);
    const std::size_t m = generators.size();
    std::vector<HalfSpace> cons;
    for (std::size_t i = 0; i < m; ++i) {
        Point e = zero_point(m);
        e[i] = -1;
        cons.push_back(HalfSpace{std::move(e), 0});
    }
    for (std::size_t k = 0; k < dim(); ++k) {
        Point row(m);
        for (std::size_t i = 0; i < m; ++i) row[i] = generators[i][k];
        cons.push_back(HalfSpace{row, d[k]});
        cons.push_back(HalfSpace{-row, -d[k]});
    }
    return lp_feasible(cons, m).has_value();
}

Cone normal_cone(const Polytope& p, std::size_t face) {
    const auto& fs = p.faces();
    require(face < fs.size(), ErrorKind::Precondition, "face index out of range");
    const auto& ids = fs[face].vertex_ids;
    const auto& vs = p.vertices();
    const Point& f0 = vs[ids.front()];

    Cone c;
    c.apex = zero_point(p.ambient_dim());
    for (std::size_t w = 0; w < vs.size(); ++w) {
        Point d = vs[w] - f0;
        if (is_zero(d)) continue;
        const bool in_face = std::binary_search(ids.begin(), ids.end(), w);
        if (in_face) c.halfspaces.push_back(HalfSpace{-d, 0});
        c.halfspaces.push_back(HalfSpace{std::move(d), 0});
    }
    for (auto& h : c.halfspaces) h = canonical(std::move(h));
    std::sort(c.halfspaces.begin(), c.halfspaces.end(), halfspace_less);
    c.halfspaces.erase(std::unique(c.halfspaces.begin(), c.halfspaces.end()), c.halfspaces.end());

    const auto facets = p.facets();
    const Body& b = p.body();
    for (std::size_t j = 0; j < facets.size(); ++j) {
        const bool holds = std::all_of(ids.begin(), ids.end(), [&](std::size_t v) { return b.incidence[v].test(j); });
        if (holds) c.generators.push_back(facets[j].normal);
    }
    for (const auto& e : p.affine_hull().equations()) {
        c.generators.push_back(e.normal);
        c.generators.push_back(-e.normal);
    }
    return c;
}

Cone normal_cone(const Polytope& p, const Polytope& f) {
    auto idx = find_face(p, f);
    require(idx.has_value(), ErrorKind::Precondition, "not a face of the polytope");
    return normal_cone(p, *idx);
}

}  // namespace vergen
