#include "vergen/vg.hpp"

#include "vergen/error.hpp"
#include "vergen/lp.hpp"
#include "vergen/parallel.hpp"

#include <algorithm>

namespace vergen {

namespace {

void check_lambda(const Scalar& lambda) {
    require(sgn(lambda) > 0 && lambda <= Scalar(1, 2), ErrorKind::InvalidArgument, "lambda must lie in (0, 1/2]");
}

Scalar power(Scalar base, int e) {
    Scalar r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// Smallest dyadic rational >= x with denominator 2^k.
Scalar ceil_dyadic(const Scalar& x, unsigned k) {
    mpz_class den = 1;
    den <<= k;
    mpz_class num;
    const mpz_class scaled_num = x.get_num() * den;
    mpz_cdiv_q(num.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den().get_mpz_t());
    Scalar out(num, den);
    out.canonicalize();
    return out;
}

std::vector<Polytope> faces_as_polytopes(const Polytope& p, int k) {
    std::vector<Polytope> out;
    for (auto i : faces_of_dim(p, k)) out.push_back(p.sub(p.faces()[i].vertex_ids));
    return out;
}

SkeletonResult cover_with_center_preference(const Polytope& p, const std::vector<Polytope>& pieces,
                                            const RunConfig& cfg) {
    CoverResult c = covers(p, pieces, cfg.cell_budget);
    SkeletonResult out{c.covered, c.witness, pieces.size()};
    if (!c.covered) {
        const Point center = p.center();
        const bool free = std::none_of(pieces.begin(), pieces.end(), [&](const Polytope& q) { return q.contains(center); });
        if (free) out.witness = center;
    }
    return out;
}

}  // namespace

std::vector<Polytope> vg_pieces(const Polytope& p, const Scalar& lambda) {
    std::vector<Polytope> out;
    out.reserve(p.vertex_count());
    const Scalar keep = 1 - lambda;
    for (const auto& v : p.vertices()) out.push_back(p.scaled(keep, lambda * v));
    return out;
}

VgResult is_vg(const Polytope& p, const Scalar& lambda, const RunConfig& cfg) {
    check_lambda(lambda);
    if (p.dim() == 0) return VgResult{true, std::nullopt};
    CoverResult c = covers(p, vg_pieces(p, lambda), cfg.cell_budget);
    return VgResult{c.covered, c.witness};
}

LambdaBracket lambda_of(const Polytope& p, const Scalar& tol, const RunConfig& cfg) {
    require(sgn(tol) > 0, ErrorKind::InvalidArgument, "tolerance must be positive");
    LambdaBracket b;
    const Scalar half(1, 2);
    ++b.probes;
    if (p.dim() == 0 || is_vg(p, half, cfg).vg) {
        b.lo = b.hi = half;
        b.lo_certified = b.hi_certified = true;
        return b;
    }
    b.hi = half;
    b.hi_certified = true;
    b.lo = Scalar(1, p.dim() + 1);
    ++b.probes;
    require(is_vg(p, b.lo, cfg).vg, ErrorKind::Verification, "polytope fails the Caratheodory floor");
    b.lo_certified = true;

    // Membership is monotone in lambda, so each probe halves (or k-sects)
    // the bracket.
    const int workers = worker_count(cfg.parallelism);
    while (b.hi - b.lo > tol) {
        const Scalar width = b.hi - b.lo;
        const Scalar step = width / (2 * (workers + 1));
        unsigned k = 0;
        while (Scalar(1) / Scalar(mpz_class(1) << k) > step) ++k;
        std::vector<Scalar> probes;
        for (int j = 1; j <= workers; ++j) {
            Scalar x = ceil_dyadic(b.lo + width * j / (workers + 1), k);
            if (x > b.lo && x < b.hi && (probes.empty() || x != probes.back())) probes.push_back(x);
        }
        auto verdicts = parallel_map(probes.size(), workers, [&](std::size_t i) { return is_vg(p, probes[i], cfg).vg; });
        b.probes += static_cast<int>(probes.size());
        for (std::size_t i = 0; i < probes.size(); ++i) {
            if (verdicts[i]) {
                b.lo = std::max(b.lo, probes[i]);
            } else {
                b.hi = std::min(b.hi, probes[i]);
            }
        }
    }
    return b;
}

DefectReport defect(const Polytope& p, const Scalar& lambda, const RunConfig& cfg) {
    check_lambda(lambda);
    if (p.dim() == 0) return DefectReport{Region(p.affine_hull()), 0, std::nullopt};
    CoverResult c = covers(p, vg_pieces(p, lambda), cfg.cell_budget);
    Scalar vol = c.residual.volume();
    return DefectReport{std::move(c.residual), std::move(vol), std::move(c.witness)};
}

bool is_affine_cube(const Polytope& p) {
    const int n = p.dim();
    if (p.vertex_count() != (std::size_t{1} << n)) return false;
    const Body& b = p.body();
    std::vector<Point> edges;
    for (std::size_t w = 1; w < b.vertices.size(); ++w)
        if (b.adjacent(0, w)) edges.push_back(p.vertices()[w] - p.vertices()[0]);
    if (static_cast<int>(edges.size()) != n) return false;
    std::vector<Point> image;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Point x = p.vertices()[0];
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1U) x += edges[static_cast<std::size_t>(i)];
        image.push_back(std::move(x));
    }
    std::sort(image.begin(), image.end(), lex_less);
    return image == p.sorted_vertices();
}

VertexBound vertex_bound_check(const Polytope& p, const Scalar& lambda, const RunConfig& cfg) {
    check_lambda(lambda);
    require(p.is_full_dimensional(), ErrorKind::Precondition, "vertex bound needs a full-dimensional polytope");
    require(is_vg(p, lambda, cfg).vg, ErrorKind::Precondition, "polytope is not lambda-vertex generated");
    VertexBound r;
    r.vertices = p.vertex_count();
    r.bound = power(1 / (1 - lambda), p.dim());
    const Scalar count(static_cast<unsigned long>(r.vertices));
    r.pass = count >= r.bound;
    r.equality = count == r.bound;
    if (r.vertices == (std::size_t{1} << p.dim())) r.parallelepiped = is_affine_cube(p);
    return r;
}

FaceInheritance face_inheritance_check(const Polytope& p, const Scalar& lambda, const RunConfig& cfg) {
    check_lambda(lambda);
    const auto pieces = vg_pieces(p, lambda);
    std::vector<std::size_t> ids;
    for (int k = 1; k < p.dim(); ++k) {
        auto level = faces_of_dim(p, k);
        ids.insert(ids.end(), level.begin(), level.end());
    }
    FaceInheritance out;
    out.faces = parallel_map(ids.size(), worker_count(cfg.parallelism), [&](std::size_t i) {
        const Face& f = p.faces()[ids[i]];
        const Polytope face = p.sub(f.vertex_ids);
        FaceVerdict v;
        v.face = ids[i];
        v.dim = f.dim;
        v.contained = covers(face, pieces, cfg.cell_budget).covered;
        VgResult r = is_vg(face, lambda, cfg);
        v.vg = r.vg;
        v.witness = r.witness;
        return v;
    });
    for (const auto& v : out.faces) {
        if (!v.vg) out.obstructions.push_back(v.face);
        if (v.contained && !v.vg && out.pass) {
            out.pass = false;
            out.counterexample = v.face;
        }
    }
    return out;
}

SymmetricCriterion symmetric_boundary_criterion(const Polytope& p, const Scalar& lambda, const RunConfig& cfg) {
    check_lambda(lambda);
    SymmetricCriterion out;
    if (auto c = is_centrally_symmetric(p)) {
        out.center = *c;
        out.symmetric = true;
    } else {
        out.center = p.center();
        const Scalar r = lambda / (1 - lambda);
        for (const auto& v : p.vertices()) {
            require(p.contains(out.center - r * (v - out.center)), ErrorKind::Precondition,
                    "polytope is neither centrally symmetric nor satisfies -l(P-c) in (1-l)(P-c)");
        }
    }
    const auto pieces = vg_pieces(p, lambda);
    const auto facets = faces_of_dim(p, p.dim() - 1);
    auto results = parallel_map(facets.size(), worker_count(cfg.parallelism), [&](std::size_t i) {
        return covers(p.sub(p.faces()[facets[i]].vertex_ids), pieces, cfg.cell_budget);
    });
    out.boundary_covered = true;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (!results[i].covered) {
            out.boundary_covered = false;
            out.uncovered_facet = facets[i];
            out.witness = results[i].witness;
            break;
        }
    }
    out.direct = is_vg(p, lambda, cfg).vg;
    out.agree = out.direct == out.boundary_covered;
    return out;
}

GenericPair generic_pair(const Polytope& p, const Polytope& q) {
    require(p.ambient_dim() == q.ambient_dim(), ErrorKind::DimensionMismatch, "polytopes of different dimensions");
    require(p.is_full_dimensional() && q.is_full_dimensional(), ErrorKind::InvalidArgument,
            "generic pairs need full-dimensional polytopes");
    const std::size_t n = p.ambient_dim();
    auto cone_of = [](const Polytope& poly, std::size_t i) {
        const Point& v = poly.vertices()[i];
        std::vector<HalfSpace> hs;
        for (const auto& w : poly.vertices())
            if (w != v) hs.push_back(HalfSpace{w - v, 0});
        return hs;
    };
    const Point cp = p.center();
    GenericPair out;
    for (std::size_t i = 0; i < p.vertex_count(); ++i) {
        const auto hp = cone_of(p, i);
        const Point axis = p.vertices()[i] - cp;
        for (std::size_t j = 0; j < q.vertex_count(); ++j) {
            std::vector<HalfSpace> both = hp;
            const auto hq = cone_of(q, j);
            both.insert(both.end(), hq.begin(), hq.end());
            // Nonzero y in N_P(v) has <y, v - c> > 0, so this scaling loses nothing.
            std::vector<HalfSpace> scaled = both;
            scaled.push_back(HalfSpace{axis, 1});
            scaled.push_back(HalfSpace{-axis, -1});
            auto y = lp_feasible(scaled, n);
            if (!y) continue;
            if (lp_strictly_feasible(both, n)) continue;
            out.generic = false;
            out.violation = std::make_pair(p.vertices()[i], q.vertices()[j]);
            out.shared = *y;
            return out;
        }
    }
    return out;
}

GenericSum generic_sum_check(const Polytope& p, const Polytope& q, const Scalar& lambda, const RunConfig& cfg) {
    check_lambda(lambda);
    GenericSum out;
    out.p_symmetric = is_centrally_symmetric(p).has_value();
    out.q_symmetric = is_centrally_symmetric(q).has_value();
    out.p_vg = is_vg(p, lambda, cfg).vg;
    out.q_vg = is_vg(q, lambda, cfg).vg;
    out.generic = generic_pair(p, q).generic;
    out.preconditions = out.p_symmetric && out.q_symmetric && out.p_vg && out.q_vg && out.generic;
    VgResult s = is_vg(minkowski_sum(p, q), lambda, cfg);
    out.sum_vg = s.vg;
    out.witness = s.witness;
    out.pass = !out.preconditions || out.sum_vg;
    return out;
}

SegmentMonotonicity segment_monotonicity_check(const Polytope& p, const Segment& s, const Scalar& lambda,
                                               const RunConfig& cfg) {
    check_lambda(lambda);
    for (const auto& f : faces_as_polytopes(p, p.dim() - 1))
        require(is_vg(f, lambda, cfg).vg, ErrorKind::Precondition, "a facet of the polytope is not lambda-VG");
    // The containment is for origin-symmetric segments; other placements only translate P + l.
    const Point half = Scalar(1, 2) * (s.b - s.a);
    const DefectReport before = defect(p, lambda, cfg);
    const DefectReport after = defect(add_segment(p, Segment{-half, half}), lambda, cfg);
    SegmentMonotonicity out{true, before.volume, after.volume, std::nullopt};
    for (std::size_t i = 0; i < after.region.size() && out.pass; ++i) {
        Region rest = Region::of(after.region.cell(i));
        for (std::size_t j = 0; j < before.region.size() && !rest.empty(); ++j)
            rest = subtract(rest, before.region.cell(j), cfg.cell_budget);
        if (!rest.empty()) {
            out.pass = false;
            out.witness = rest.interior_point();
        }
    }
    return out;
}

Pvap pvap_check(const Polytope& p, const Matrix& a, int max_order, const RunConfig& cfg) {
    const std::size_t n = p.ambient_dim();
    const Polytope ap = linear_image(p, a);
    Pvap out;
    const Matrix id = identity(n);
    Matrix power_k = a;
    for (int k = 1; k <= max_order; ++k) {
        if (power_k == id) {
            out.order = k;
            break;
        }
        power_k = multiply(power_k, a);
    }
    require(out.order > 0, ErrorKind::Precondition, "linear map has no finite order within the bound");

    std::vector<Polytope> pieces;
    for (const auto& w : ap.vertices()) pieces.push_back(p.translated(w));
    CoverResult c = covers(minkowski_sum(p, ap), pieces, cfg.cell_budget);
    out.convex = c.covered;
    out.witness = c.witness;

    out.vg_half = is_vg(p, Scalar(1, 2), cfg).vg;
    const Point x = p.center() - ap.center();
    out.translate = ap.translated(x) == p;
    if (out.translate) out.translation = x;
    out.clause2 = out.vg_half && out.translate;
    out.holds = out.convex == out.clause2;
    return out;
}

ErosionMembership erosion_membership(const Polytope& p, const Polytope& q, const Scalar& lambda, const Point& x) {
    check_lambda(lambda);
    require(p.ambient_dim() == q.ambient_dim() && x.size() == p.ambient_dim(), ErrorKind::DimensionMismatch,
            "erosion inputs of different dimensions");
    const std::size_t n = p.ambient_dim();
    const auto pieces = vg_pieces(p, lambda);
    ErosionMembership out;

    // x - Q inside int P, and disjoint from every closed piece.
    bool lhs = std::all_of(q.vertices().begin(), q.vertices().end(),
                           [&](const Point& w) { return p.contains_relint(x - w); });
    if (lhs) {
        std::vector<Point> moved;
        for (const auto& w : q.vertices()) moved.push_back(x - w);
        const auto shifted = convex_hull(std::move(moved)).halfspaces();
        for (const auto& k : pieces) {
            std::vector<HalfSpace> both = shifted;
            const auto hk = k.halfspaces();
            both.insert(both.end(), hk.begin(), hk.end());
            if (lp_feasible(both, n)) {
                lhs = false;
                break;
            }
        }
    }
    out.in_lhs = lhs;

    const Polytope sum = minkowski_sum(p, q);
    const auto sum_pieces = vg_pieces(sum, lambda);
    out.in_rhs = sum.contains(x) &&
                 std::none_of(sum_pieces.begin(), sum_pieces.end(), [&](const Polytope& k) { return k.contains(x); });
    return out;
}

SkeletonResult skeleton_sum_check(const Polytope& p, int k, const Scalar& mu, const RunConfig& cfg) {
    require(k >= 0 && k < p.dim(), ErrorKind::InvalidArgument, "skeleton dimension out of range");
    require(sgn(mu) > 0 && mu < 1, ErrorKind::InvalidArgument, "mu must lie in (0, 1)");
    const Point zero = zero_point(p.ambient_dim());
    const Polytope base = p.scaled(1 - mu, zero);
    std::vector<Polytope> pieces;
    for (const auto& f : faces_as_polytopes(p, k)) pieces.push_back(minkowski_sum(base, f.scaled(mu, zero)));
    return cover_with_center_preference(p, pieces, cfg);
}

SkeletonResult skeleton_pair_check(const Polytope& p, int k, int l, const Scalar& lambda, const RunConfig& cfg) {
    require(k >= 0 && k <= p.dim() && l >= 0 && l <= p.dim(), ErrorKind::InvalidArgument,
            "skeleton dimension out of range");
    require(sgn(lambda) > 0 && lambda < 1, ErrorKind::InvalidArgument, "lambda must lie in (0, 1)");
    const Point zero = zero_point(p.ambient_dim());
    std::vector<Polytope> first, second;
    for (const auto& f : faces_as_polytopes(p, k)) first.push_back(f.scaled(lambda, zero));
    for (const auto& g : faces_as_polytopes(p, l)) second.push_back(g.scaled(1 - lambda, zero));
    std::vector<Polytope> pieces;
    for (const auto& f : first)
        for (const auto& g : second) pieces.push_back(minkowski_sum(f, g));
    return cover_with_center_preference(p, pieces, cfg);
}

int critical_dimension(const Polytope& p, const RunConfig& cfg) {
    const int n = p.dim();
    require(n <= 3, ErrorKind::DimensionCap, "critical dimension supports dim <= 3");
    for (int k = 0; k <= n / 2; ++k)
        if (skeleton_pair_check(p, k, n - k, Scalar(1, 2), cfg).covered) return k;
    fail(ErrorKind::Verification, "no k <= n/2 satisfies 2P = skel_k P + skel_{n-k} P");
}

SimplexScan simplex_minimality_scan(const Polytope& p, const Scalar& tol, const RunConfig& cfg) {
    require(p.is_full_dimensional(), ErrorKind::Precondition, "simplex scan needs a full-dimensional polytope");
    const int n = p.dim();
    const Scalar floor(1, n + 1);
    SimplexScan out;
    out.simplex = p.vertex_count() == static_cast<std::size_t>(n + 1);
    if (out.simplex) {
        out.bracket = lambda_of(p, tol, cfg);
        out.probe = floor + Scalar(1, 64);
        out.probe_vg = is_vg(p, out.probe, cfg).vg;
        out.pass = out.bracket->hi - floor <= tol && out.bracket->hi_certified && !out.probe_vg;
        return out;
    }
    for (unsigned j = 1;; ++j) {
        const Scalar step = Scalar(1) / Scalar(mpz_class(1) << j);
        if (step < tol) break;
        const Scalar lambda = floor + step;
        if (lambda > Scalar(1, 2)) continue;
        out.probe = lambda;
        if (is_vg(p, lambda, cfg).vg) {
            out.probe_vg = true;
            out.pass = true;
            return out;
        }
    }
    return out;
}

}  // namespace vergen
