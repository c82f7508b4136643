// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "vergen/constructions.hpp"
#include "vergen/instances.hpp"
#include "vergen/metric.hpp"
#include "vergen/vg.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

using namespace vergen;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// VG instances seen by criteria 1-4, rechecked by criterion 13.
struct VgInstance {
    Polytope p;
    Scalar lambda;
};
std::vector<VgInstance> g_vg_instances;

Scalar frac(long a, long b) { return Scalar(a, b); }

long ipow(long base, int k) {
    long r = 1;
    while (k-- > 0) r *= base;
    return r;
}

std::size_t random_count(Random& rng, std::size_t lo, std::size_t extra) {
    return lo + static_cast<std::size_t>(rng.integer(0, static_cast<long>(extra)));
}

Outcome caratheodory_floor() {
    std::size_t ok = 0, total = 0;
    for (std::size_t n : {2, 3}) {
        const std::size_t cases = n == 2 ? 200 : 50;
        for (std::size_t i = 0; i < cases; ++i, ++total) {
            Random rng(case_seed(100 + n, i));
            const Polytope p = rng.hull(n, random_count(rng, n + 1, 6));
            const Scalar l(1, static_cast<unsigned long>(n + 1));
            if (is_vg(p, l).vg) {
                ++ok;
                g_vg_instances.push_back({p, l});
            }
        }
    }
    return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " random polytopes VG at 1/(n+1)"};
}

Outcome simplex_values() {
    const Scalar tol(1, 1024);
    std::ostringstream d;
    bool pass = true;
    for (std::size_t n : {2, 3}) {
        const Scalar target(1, static_cast<unsigned long>(n + 1));
        const LambdaBracket b = lambda_of(simplex(n), tol);
        const bool inside = b.lo >= target - tol && b.hi <= target + tol && b.lo <= b.hi;
        const bool above = !is_vg(simplex(n), target + frac(1, 64)).vg;
        pass = pass && inside && above;
        d << "D" << n << " [" << b.lo.get_str() << ", " << b.hi.get_str() << "] probe+1/64 "
          << (above ? "false" : "TRUE") << "; ";
    }
    return {pass, d.str()};
}

Outcome zonotope_law() {
    std::size_t ok = 0;
    for (std::size_t i = 0; i < 100; ++i) {
        Random rng(case_seed(300, i));
        const std::size_t n = 2 + i % 2;
        const Polytope z = zonotope_to_polytope(rng.zonotope(n, random_count(rng, n, 6 - n)));
        if (is_vg(z, frac(1, 2)).vg) {
            ++ok;
            g_vg_instances.push_back({z, frac(1, 2)});
        }
    }
    const LambdaBracket b = lambda_of(cube(3), frac(1, 1024));
    const bool exact = b.lo == frac(1, 2) && b.hi == frac(1, 2) && b.lo_certified && b.hi_certified;
    return {ok == 100 && exact, std::to_string(ok) + "/100 zonotopes VG at 1/2; cube bracket [" + b.lo.get_str() +
                                    ", " + b.hi.get_str() + "]"};
}

Outcome segment_stability() {
    std::size_t stable = 0, mono = 0;
    for (std::size_t i = 0; i < 100; ++i) {
        Random rng(case_seed(400, i));
        const std::size_t n = 2 + i % 2;
        const bool zono = i % 4 == 1;
        const Polytope p = zono ? zonotope_to_polytope(rng.zonotope(n, random_count(rng, n, 4 - n)))
                                : rng.hull(n, random_count(rng, n + 1, 4));
        const Scalar l = zono ? frac(1, 2) : Scalar(1, static_cast<unsigned long>(n + 1));
        if (!is_vg(p, l).vg) continue;
        const Polytope sum = add_segment(p, rng.segment(n));
        if (is_vg(sum, l).vg) {
            ++stable;
            g_vg_instances.push_back({sum, l});
        }
    }
    for (std::size_t i = 0; i < 50; ++i) {
        Random rng(case_seed(401, i));
        Polytope p = rng.hull(2, random_count(rng, 3, 3));
        while (is_vg(p, frac(2, 5)).vg) p = rng.hull(2, random_count(rng, 3, 3));
        if (segment_monotonicity_check(p, rng.segment(2), frac(2, 5)).pass) ++mono;
    }
    return {stable == 100 && mono == 50,
            std::to_string(stable) + "/100 segment sums stay VG; " + std::to_string(mono) + "/50 monotone defects"};
}

Outcome face_inheritance() {
    const Polytope cross = cross_polytope(3);
    const VgResult r = is_vg(cross, frac(1, 2));
    const FaceInheritance fc = face_inheritance_check(cross, frac(1, 2));
    bool triangular = false;
    for (auto idx : fc.obstructions) {
        const auto& f = cross.faces()[idx];
        if (f.dim == 2 && f.vertex_ids.size() == 3) triangular = true;
    }
    const FaceInheritance cube_fc = face_inheritance_check(cube(3), frac(1, 2));
    std::size_t facets_ok = 0;
    for (const auto& f : cube_fc.faces)
        if (f.dim == 2 && f.vg) ++facets_ok;
    const bool witness_ok = r.witness && cross.contains(*r.witness);
    return {!r.vg && witness_ok && triangular && cube_fc.pass && facets_ok == 6,
            std::string("cross VG=") + (r.vg ? "true" : "false") + (triangular ? ", triangular facet obstruction" : "") +
                "; cube facets VG " + std::to_string(facets_ok) + "/6"};
}

// Independent oracle for the triangle: each piece (T + v)/2 is T cut by one
// halfspace, so the defect is T clipped by the opposite halfspaces.
using P2 = std::pair<Scalar, Scalar>;

std::vector<P2> clip(const std::vector<P2>& poly, const Scalar& a, const Scalar& b, const Scalar& c) {
    // keep a x + b y <= c
    std::vector<P2> out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const P2& s = poly[i];
        const P2& e = poly[(i + 1) % poly.size()];
        const Scalar fs = a * s.first + b * s.second - c;
        const Scalar fe = a * e.first + b * e.second - c;
        if (fs <= 0) out.push_back(s);
        if ((fs < 0 && fe > 0) || (fs > 0 && fe < 0)) {
            const Scalar t = fs / (fs - fe);
            out.push_back({s.first + t * (e.first - s.first), s.second + t * (e.second - s.second)});
        }
    }
    std::vector<P2> dedup;
    for (const auto& p : out)
        if (std::find(dedup.begin(), dedup.end(), p) == dedup.end()) dedup.push_back(p);
    return dedup;
}

Scalar shoelace(const std::vector<P2>& poly) {
    Scalar twice = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const P2& s = poly[i];
        const P2& e = poly[(i + 1) % poly.size()];
        twice += s.first * e.second - e.first * s.second;
    }
    return abs(twice) / 2;
}

Outcome triangle_defect() {
    const std::vector<P2> tri{{0, 0}, {1, 0}, {0, 1}};
    std::vector<P2> oracle = tri;
    for (const P2& v : tri) {
        // piece corner at v: the line through the two edge midpoints at v,
        // oriented so the piece is on its <= side; keep the other side.
        std::vector<P2> others;
        for (const P2& w : tri)
            if (w != v) others.push_back({(v.first + w.first) / 2, (v.second + w.second) / 2});
        const Scalar a = others[1].second - others[0].second;
        const Scalar b = others[0].first - others[1].first;
        Scalar c = a * others[0].first + b * others[0].second;
        Scalar sa = a, sb = b;
        if (sa * v.first + sb * v.second > c) sa = -sa, sb = -sb, c = -c;
        oracle = clip(oracle, -sa, -sb, -c);
    }
    const Scalar oracle_area = shoelace(oracle);
    std::set<std::vector<Scalar>> oracle_set;
    for (const auto& p : oracle) oracle_set.insert({p.first, p.second});

    const DefectReport d = defect(simplex(2), frac(1, 2));
    const auto convex = d.region.as_convex();
    std::set<std::vector<Scalar>> lib_set;
    if (convex)
        for (const auto& v : convex->vertices()) lib_set.insert(v);
    const std::set<std::vector<Scalar>> medial{{frac(1, 2), 0}, {0, frac(1, 2)}, {frac(1, 2), frac(1, 2)}};
    const bool pass = d.volume == frac(1, 8) && oracle_area == frac(1, 8) && lib_set == oracle_set && lib_set == medial;
    return {pass, "volume " + d.volume.get_str() + ", oracle " + oracle_area.get_str() +
                      (lib_set == medial ? ", region is the medial triangle" : ", region differs")};
}

Outcome generic_pairs() {
    const Polytope sq = cube(2), diamond = cross_polytope(2);
    const GenericPair same = generic_pair(sq, sq);
    const GenericPair rotated = generic_pair(sq, diamond);
    const bool sum_vg = is_vg(minkowski_sum(sq, diamond), frac(1, 2)).vg;
    const bool pass = !same.generic && same.shared && same.violation && rotated.generic && sum_vg;
    return {pass, std::string("square/square generic=") + (same.generic ? "true" : "false") +
                      (same.shared ? " (shared ray " + format_point(*same.shared) + ")" : "") +
                      "; square/rotated generic=" + (rotated.generic ? "true" : "false") +
                      ", sum VG=" + (sum_vg ? "true" : "false")};
}

Outcome generalized_vg() {
    std::vector<Polytope> inputs{simplex(2)};
    for (std::size_t i = 0; i < 20; ++i) {
        Random rng(case_seed(800, i));
        inputs.push_back(rng.hull(2, random_count(rng, 3, 5)));
    }
    inputs.push_back(simplex(3));
    std::size_t ok = 0;
    bool planar_single = true;
    for (const auto& p : inputs) {
        const Augmentation a = augment_to_vg(p);
        if (p.ambient_dim() == 2 && a.zonotope.generators.size() > 1) planar_single = false;
        if (a.sum == minkowski_sum(p, zonotope_to_polytope(a.zonotope)) && is_vg(a.sum, frac(1, 2)).vg) ++ok;
    }
    return {ok == inputs.size() && planar_single,
            std::to_string(ok) + "/" + std::to_string(inputs.size()) + " augmentations certified" +
                (planar_single ? ", planar Z is a single segment" : "")};
}

Outcome planar_density() {
    std::ostringstream d;
    bool pass = true;
    for (const Scalar& eps : {frac(1, 4), frac(1, 10)}) {
        const Densified r = densify2d(simplex(2), eps);
        const Scalar h = hausdorff_sq(simplex(2), r.q);
        const bool ok = r.verified && h <= eps * eps && h == r.hausdorff_sq && is_vg(r.q, frac(1, 2)).vg;
        pass = pass && ok;
        d << "eps " << eps.get_str() << ": " << r.q.vertex_count() << " vertices, d_H^2 " << h.get_str() << "; ";
    }
    return {pass, d.str()};
}

Outcome pvap() {
    const Polytope sq = cube(2), tri = simplex(2);
    const Matrix neg = finite_order_matrix(0), rot = finite_order_matrix(1);
    const Pvap a = pvap_check(sq, neg), b = pvap_check(tri, neg), c = pvap_check(sq, rot);
    bool pass = a.convex && a.clause2 && !b.convex && !b.clause2 && c.convex && c.clause2;
    std::size_t agree = 0;
    for (std::size_t i = 0; i < 20; ++i) {
        Random rng(case_seed(1000, i));
        const Pvap r = pvap_check(rng.hull(2, random_count(rng, 3, 4)), finite_order_matrix(static_cast<int>(i)));
        if (r.convex == r.clause2) ++agree;
    }
    pass = pass && agree == 20;
    return {pass, "fixed cases " + std::string(a.convex && !b.convex && c.convex ? "true/false/true" : "mismatch") +
                      "; random agree " + std::to_string(agree) + "/20"};
}

Outcome covering_nets() {
    bool pass = true;
    std::ostringstream d;
    const Polytope sq = cube(2), tri = simplex(2);
    for (int k = 1; k <= 4; ++k) {
        const NetCertificate n = covering_net(sq, frac(1, 2), k);
        const Scalar exact(ipow(4, k));
        pass = pass && n.verified && Scalar(static_cast<long>(n.centers.size())) == exact && n.volume_bound == exact;
        d << n.centers.size() << (k < 4 ? "," : "; triangle ");
    }
    for (int k = 1; k <= 3; ++k) {
        const NetCertificate n = covering_net(tri, frac(1, 3), k);
        pass = pass && n.verified && Scalar(static_cast<long>(n.centers.size())) <= Scalar(ipow(3, k)) && !n.clamped;
        d << n.centers.size() << (k < 3 ? "," : "");
    }
    return {pass, "square sizes " + d.str()};
}

Outcome skeleton_sums() {
    const Polytope c = cube(3);
    const bool kg = skeleton_sum_check(c, 1, frac(1, 3)).covered;
    const bool balanced = skeleton_pair_check(c, 2, 1, frac(1, 2)).covered;
    const SkeletonResult mixed = skeleton_pair_check(c, 1, 2, frac(2, 3));
    const bool center = !mixed.covered && mixed.witness && *mixed.witness == c.center();
    const int ks = critical_dimension(cube(2)), kc = critical_dimension(c), kt = critical_dimension(simplex(3));
    const bool pass = kg && balanced && center && ks == 0 && kc == 0 && kt == 1;
    std::ostringstream d;
    d << "kG " << kg << ", balanced " << balanced << ", mixed 2/3 witness at center " << center
      << "; k* square/cube/D3 = " << ks << "/" << kc << "/" << kt;
    return {pass, d.str()};
}

Outcome vertex_count() {
    std::size_t ok = 0;
    for (const auto& inst : g_vg_instances)
        if (vertex_bound_check(inst.p, inst.lambda).pass) ++ok;
    const VertexBound cb = vertex_bound_check(cube(3), frac(1, 2));
    const bool pass = !g_vg_instances.empty() && ok == g_vg_instances.size() && cb.equality && cb.parallelepiped;
    return {pass, std::to_string(ok) + "/" + std::to_string(g_vg_instances.size()) +
                      " instances meet the bound; cube equality " + (cb.equality ? "flagged" : "missed") +
                      (cb.parallelepiped ? ", affine cube verified" : "")};
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Caratheodory floor", 300, caratheodory_floor},
        {2, "Simplex values", 120, simplex_values},
        {3, "Zonotope law", 600, zonotope_law},
        {4, "Segment stability and defect monotonicity", 600, segment_stability},
        {5, "Face inheritance", 60, face_inheritance},
        {6, "Triangle defect", 1, triangle_defect},
        {7, "Generic pairs", 60, generic_pairs},
        {8, "Generalized VG", 900, generalized_vg},
        {9, "Planar density", 1800, planar_density},
        {10, "P + V(AP)", 300, pvap},
        {11, "Covering nets", 300, covering_nets},
        {12, "Skeleton sums", 600, skeleton_sums},
        {13, "Vertex count", 600, vertex_count},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.limit_seconds;
        const bool pass = o.pass && in_time;
        if (!pass) ++failures;
        std::printf("%s %2d %s: %s (%.2fs, limit %.0fs%s)\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                    secs, c.limit_seconds, in_time ? "" : ", over time");
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
