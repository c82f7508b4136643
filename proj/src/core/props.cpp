#include "vergen/props.hpp"

#include "vergen/constructions.hpp"
#include "vergen/cone.hpp"
#include "vergen/error.hpp"
#include "vergen/instances.hpp"
#include "vergen/metric.hpp"
#include "vergen/parallel.hpp"
#include "vergen/vg.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace vergen {
namespace {

struct Check {
    std::string property;
    bool pass = false;
    Json detail;  // witness data for failures
};

using Checks = std::vector<Check>;
using CaseFn = std::function<Checks(std::size_t, Random&, const RunConfig&)>;

Json opt_point(const std::optional<Point>& p) { return p ? point_to_json(*p) : Json(nullptr); }

Scalar floor_lambda(std::size_t n) { return Scalar(1, static_cast<unsigned long>(n + 1)); }

// Random point of P as a convex combination of its vertices.
Point sample_in(const Polytope& p, Random& rng) {
    Point x = zero_point(p.ambient_dim());
    Scalar total = 0;
    for (const auto& v : p.vertices()) {
        const Scalar w(rng.integer(1, 8));
        x += w * v;
        total += w;
    }
    return Scalar(1) / total * x;
}

Scalar extent(const Polytope& p) {
    Scalar best = 0;
    for (const auto& v : p.vertices())
        for (const auto& c : v) best = std::max(best, Scalar(abs(c)));
    return best == 0 ? Scalar(1) : best;
}

Polytope small_box(std::size_t n, const Scalar& side) {
    std::vector<Point> pts;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Point p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = (mask >> i & 1U) ? side : Scalar(0);
        pts.push_back(std::move(p));
    }
    return convex_hull(std::move(pts));
}

Checks zonotope_case(std::size_t i, Random& rng, const RunConfig& cfg) {
    const std::size_t n = 2 + i % 2;
    const Zonotope z = rng.zonotope(n, static_cast<std::size_t>(rng.integer(static_cast<long>(n), 6)));
    const Polytope p = zonotope_to_polytope(z);
    const Scalar half(1, 2);
    Checks out;

    const VgResult vg = is_vg(p, half, cfg);
    out.push_back({"vg_half", vg.vg, {{"witness", opt_point(vg.witness)}}});
    out.push_back({"centrally_symmetric", is_centrally_symmetric(p).has_value(), {}});
    if (vg.vg) {
        const VertexBound vb = vertex_bound_check(p, half, cfg);
        out.push_back({"vertex_bound", vb.pass, {{"vertices", vb.vertices}, {"bound", scalar_to_json(vb.bound)}}});
    }

    // P + [0, 2^-j s] -> P in d_F; every member and the limit stay VG.
    if (n == 2) {
        const Point s = rng.nonzero_point(n);
        bool ok = vg.vg;
        Scalar prev = -1;
        for (int j = 1; j <= 3 && ok; ++j) {
            const Scalar t = Scalar(1) / Scalar(mpz_class(1) << j);
            const Polytope pj = add_segment(p, Segment{zero_point(n), t * s});
            const Scalar d = dF_sq(pj, p);
            ok = is_vg(pj, half, cfg).vg && (prev < 0 || d < prev);
            prev = d;
        }
        out.push_back({"dF_closedness", ok, {}});
    }
    return out;
}

Checks segment_case(std::size_t i, Random& rng, const RunConfig& cfg) {
    const std::size_t n = (i % 4 == 3) ? 3 : 2;
    Checks out;
    // VG inputs: random hulls at the floor, planar zonotopes at 1/2.
    const bool zono = i % 2 == 1 && n == 2;
    const Polytope p = zono ? zonotope_to_polytope(rng.zonotope(2, static_cast<std::size_t>(rng.integer(2, 4))))
                            : rng.hull(n, n + 1 + static_cast<std::size_t>(rng.integer(0, 4)));
    const Scalar lambda = zono ? Scalar(1, 2) : floor_lambda(n);
    const Segment s = rng.segment(n);
    if (is_vg(p, lambda, cfg).vg) {
        const VgResult after = is_vg(add_segment(p, s), lambda, cfg);
        out.push_back({"stability", after.vg, {{"witness", opt_point(after.witness)}}});
    } else {
        out.push_back({"stability", false, {{"reason", "input not VG at the floor"}}});
    }

    if (n == 2) {
        // planar facets are segments, so the monotonicity precondition always holds
        const Polytope q = rng.hull(2, 3 + static_cast<std::size_t>(rng.integer(0, 3)));
        const Scalar mid(2, 5);
        const SegmentMonotonicity m = segment_monotonicity_check(q, rng.segment(2), mid, cfg);
        out.push_back({"monotonicity", m.pass, {{"witness", opt_point(m.witness)}}});

        const DefectReport d = defect(q, mid, cfg);
        const bool vg = is_vg(q, mid, cfg).vg;
        out.push_back({"defect_agrees", (d.volume == 0) == vg, {{"volume", scalar_to_json(d.volume)}}});

        // in_lhs implies in_rhs, probed at the defect witness and at a random point
        const Polytope box = small_box(2, extent(q) / 512);
        std::vector<Point> xs{sample_in(q, rng)};
        if (d.witness) xs.push_back(*d.witness);
        bool ok = true;
        Json bad;
        for (const auto& x : xs) {
            const ErosionMembership e = erosion_membership(q, box, mid, x);
            if (e.in_lhs && !e.in_rhs) ok = false, bad = point_to_json(x);
        }
        out.push_back({"erosion", ok, {{"point", bad}}});
    }
    return out;
}

Checks faces_case(std::size_t i, Random& rng, const RunConfig& cfg) {
    const std::size_t n = 2 + i % 2;
    const Polytope p = rng.hull(n, n + 1 + static_cast<std::size_t>(rng.integer(0, 5)));
    const Polytope q = rng.hull(n, n + 1 + static_cast<std::size_t>(rng.integer(0, 3)));
    Checks out;

    const auto back = h_to_v(v_to_h(p), n);
    out.push_back({"round_trip", back && *back == p, {}});

    bool extreme = true;
    for (std::size_t k = 0; k < p.vertex_count() && extreme; ++k) {
        std::vector<Point> rest;
        for (std::size_t j = 0; j < p.vertex_count(); ++j)
            if (j != k) rest.push_back(p.vertices()[j]);
        extreme = !convex_hull(std::move(rest)).contains(p.vertices()[k]);
    }
    out.push_back({"extremality", extreme, {}});

    const auto vertex_faces = faces_of_dim(p, 0);
    const Polytope sum = minkowski_sum(p, q);
    bool fan = true, additive = true;
    Json bad;
    for (int t = 0; t < 3; ++t) {
        const Point u = rng.nonzero_point(n);
        const bool hit = std::any_of(vertex_faces.begin(), vertex_faces.end(),
                                     [&](std::size_t f) { return normal_cone(p, f).contains(u); });
        if (!hit) fan = false, bad = point_to_json(u);
        const SupportResult sp = support(p, u), sq = support(q, u), ss = support(sum, u);
        if (ss.value != sp.value + sq.value || !(ss.face == minkowski_sum(sp.face, sq.face)))
            additive = false, bad = point_to_json(u);
    }
    out.push_back({"fan_completeness", fan, {{"direction", bad}}});
    out.push_back({"support_additivity", additive, {{"direction", bad}}});
    out.push_back({"dF_ge_dH", dF_sq(p, q) >= hausdorff_sq(p, q), {}});
    out.push_back({"face_inheritance", face_inheritance_check(p, floor_lambda(n), cfg).pass, {}});
    return out;
}

Checks symmetric_case(std::size_t i, Random& rng, const RunConfig& cfg) {
    Checks out;
    const Polytope z = zonotope_to_polytope(rng.zonotope(2, static_cast<std::size_t>(rng.integer(2, 5))));
    const Scalar lambda = (i % 2 == 0) ? Scalar(1, 2) : Scalar(2, 5);
    const SymmetricCriterion sc = symmetric_boundary_criterion(z, lambda, cfg);
    out.push_back({"boundary_criterion", sc.agree && sc.direct, {{"witness", opt_point(sc.witness)}}});

    const Polytope p = rng.hull(2, 3 + static_cast<std::size_t>(rng.integer(0, 3)));
    const Pvap pv = pvap_check(p, finite_order_matrix(static_cast<int>(i)), 24, cfg);
    out.push_back({"pvap", pv.holds, {{"convex", pv.convex}, {"clause2", pv.clause2}}});
    return out;
}

Checks generic_case(std::size_t, Random& rng, const RunConfig& cfg) {
    Checks out;
    const Polytope p = zonotope_to_polytope(rng.zonotope(2, static_cast<std::size_t>(rng.integer(2, 4))));
    const Polytope q = zonotope_to_polytope(rng.zonotope(2, static_cast<std::size_t>(rng.integer(2, 4))));
    const GenericSum gs = generic_sum_check(p, q, Scalar(1, 2), cfg);
    out.push_back({"generic_sum", gs.pass, {{"generic", gs.generic}, {"witness", opt_point(gs.witness)}}});

    const Polytope a = rng.hull(2, 3 + static_cast<std::size_t>(rng.integer(0, 3)));
    const Polytope b = rng.hull(2, 3 + static_cast<std::size_t>(rng.integer(0, 3)));
    out.push_back({"generic_symmetry", generic_pair(a, b).generic == generic_pair(b, a).generic, {}});
    return out;
}

Checks series_case(std::size_t i, Random& rng, const RunConfig& cfg) {
    Checks out;
    const Polytope p = rng.hull(2, 3 + static_cast<std::size_t>(rng.integer(0, 2)));
    const Scalar lambda = floor_lambda(2);
    const int k = 1 + static_cast<int>(i % 2);
    const PointCloud s = series_partial_sum(p, lambda, k, cfg);
    Scalar scale = 1;
    for (int j = 0; j <= k; ++j) scale *= 1 - lambda;

    // The weights sum to 1 - scale, so S_k lies in (1 - scale) P (inside P when 0 is).
    const Polytope shrunk = p.scaled(1 - scale, zero_point(2));
    out.push_back({"inside", std::all_of(s.points.begin(), s.points.end(), [&](const Point& x) { return shrunk.contains(x); }), {}});
    std::vector<Polytope> pieces;
    for (const auto& c : s.points) pieces.push_back(p.scaled(scale, c));
    const CoverResult c = covers(p, pieces, cfg.cell_budget);
    out.push_back({"series_identity", c.covered, {{"witness", opt_point(c.witness)}}});

    // d_H(hull S_k, P)^2 <= ((1 - lambda)^{k+1} R)^2
    Scalar r2 = 0;
    for (const auto& v : p.vertices()) r2 = std::max(r2, squared_norm(v));
    const Scalar d = hausdorff_sq(convex_hull(s.points), p);
    out.push_back({"hausdorff_decay", d <= scale * scale * r2, {{"hausdorff_sq", scalar_to_json(d)}}});

    // monotone in lambda
    const Scalar hi(1, 2), lo(2, 5);
    out.push_back({"lambda_monotone", !is_vg(p, hi, cfg).vg || is_vg(p, lo, cfg).vg, {}});
    return out;
}

Checks covering_case(std::size_t i, Random& rng, const RunConfig& cfg) {
    Checks out;
    const Polytope p = rng.hull(2, 3 + static_cast<std::size_t>(rng.integer(0, 2)));
    const int k = 1 + static_cast<int>(i % 2);
    const NetCertificate net = covering_net(p, floor_lambda(2), k, cfg);
    const Scalar size(static_cast<long>(net.centers.size()));
    out.push_back({"net_verified", net.verified, {}});
    out.push_back({"net_size", size <= net.bound, {{"size", net.centers.size()}, {"bound", scalar_to_json(net.bound)}}});
    out.push_back({"volume_bound", size >= net.volume_bound, {{"volume_bound", scalar_to_json(net.volume_bound)}}});
    return out;
}

Checks skeleton_case(std::size_t i, Random& rng, const RunConfig& cfg) {
    Checks out;
    const std::size_t n = 2 + i % 2;
    const Polytope p = rng.hull(n, n + 1 + static_cast<std::size_t>(rng.integer(0, n == 2 ? 3 : 1)));
    bool ok = true;
    Json bad;
    for (int k = 0; k < static_cast<int>(n); ++k) {
        const SkeletonResult r = skeleton_sum_check(p, k, Scalar(1, static_cast<long>(n) - k + 1), cfg);
        if (!r.covered) ok = false, bad = {{"k", k}, {"witness", opt_point(r.witness)}};
    }
    out.push_back({"skeleton_sum", ok, bad});
    const int kstar = critical_dimension(p, cfg);
    out.push_back({"critical_dimension", kstar <= static_cast<int>(n / 2), {{"k", kstar}}});
    return out;
}

Checks simplex_case(std::size_t i, Random& rng, const RunConfig& cfg) {
    Checks out;
    const bool simplex_case = i % 2 == 0;
    const std::size_t n = (simplex_case && i % 4 == 2) ? 3 : 2;
    const Polytope p = simplex_case ? rng.hull(n, n + 1) : [&] {
        for (;;) {
            Polytope q = rng.hull(2, 4 + static_cast<std::size_t>(rng.integer(0, 2)));
            if (q.vertex_count() > 3) return q;
        }
    }();
    const SimplexScan s = simplex_minimality_scan(p, cfg.tol, cfg);
    out.push_back({"simplex_minimality", s.pass, {{"simplex", s.simplex}, {"probe", scalar_to_json(s.probe)}}});
    return out;
}

const std::map<std::string, CaseFn>& registry() {
    static const std::map<std::string, CaseFn> r{
        {"zonotope", zonotope_case}, {"segment", segment_case},   {"faces", faces_case},
        {"symmetric", symmetric_case}, {"generic", generic_case}, {"series", series_case},
        {"covering", covering_case}, {"skeleton", skeleton_case}, {"simplex", simplex_case},
    };
    return r;
}

struct CaseOutcome {
    Checks checks;
    std::string error;
};

Json run_suite(const std::string& name, std::size_t index, std::size_t cases, const RunConfig& cfg) {
    const CaseFn& fn = registry().at(name);
    const std::uint64_t suite_seed = case_seed(cfg.seed, index);
    RunConfig inner = cfg;
    inner.parallelism = 1;
    auto outcomes = parallel_map(cases, worker_count(cfg.parallelism), [&](std::size_t i) {
        Random rng(case_seed(suite_seed, i));
        CaseOutcome o;
        try {
            o.checks = fn(i, rng, inner);
        } catch (const Error& e) {
            o.error = e.what();
        }
        return o;
    });

    std::size_t passed = 0, failed = 0, errors = 0;
    Json props = Json::object(), failures = Json::array();
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const auto& o = outcomes[i];
        if (!o.error.empty()) {
            ++errors;
            failures.push_back({{"case", i}, {"error", o.error}});
            continue;
        }
        bool all = true;
        for (const auto& c : o.checks) {
            auto& slot = props[c.property];
            if (slot.is_null()) slot = {{"passed", 0}, {"failed", 0}};
            slot[c.pass ? "passed" : "failed"] = slot[c.pass ? "passed" : "failed"].get<int>() + 1;
            if (!c.pass) {
                all = false;
                Json f{{"case", i}, {"property", c.property}};
                if (!c.detail.is_null()) f["detail"] = c.detail;
                failures.push_back(std::move(f));
            }
        }
        ++(all ? passed : failed);
    }
    return Json{{"suite", name},       {"cases", cases},           {"seed", cfg.seed},
                {"passed", passed},    {"failed", failed},         {"errors", errors},
                {"properties", props}, {"failures", failures},     {"verdict", failed == 0 && errors == 0}};
}

}  // namespace

const std::vector<std::string>& props_suites() {
    static const std::vector<std::string> names{"zonotope", "segment", "faces",    "symmetric", "generic",
                                                "series",   "covering", "skeleton", "simplex"};
    return names;
}

Json run_props(const std::string& suite, std::size_t cases, const RunConfig& cfg) {
    const auto& names = props_suites();
    if (suite == "all") {
        Json all = Json::array();
        bool verdict = true;
        std::size_t errors = 0;
        for (std::size_t s = 0; s < names.size(); ++s) {
            Json r = run_suite(names[s], s, cases, cfg);
            verdict = verdict && r["verdict"].get<bool>();
            errors += r["errors"].get<std::size_t>();
            all.push_back(std::move(r));
        }
        return Json{{"suite", "all"}, {"cases", cases}, {"seed", cfg.seed}, {"errors", errors},
                    {"suites", all},  {"verdict", verdict}};
    }
    const auto it = std::find(names.begin(), names.end(), suite);
    require(it != names.end(), ErrorKind::InvalidArgument, "unknown suite: " + suite);
    return run_suite(suite, static_cast<std::size_t>(it - names.begin()), cases, cfg);
}

}  // namespace vergen
