#include "vergen/constructions.hpp"

#include "vergen/error.hpp"
#include "vergen/metric.hpp"
#include "vergen/parallel.hpp"

#include <algorithm>
#include <functional>

namespace vergen {

namespace {

using GeneratorFilter = std::function<bool(const Point&)>;

Scalar power(const Scalar& base, int e) {
    Scalar r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

void dedupe(std::vector<Point>& pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

// Integer directions ordered by max-norm, then lexicographically.
class DirectionScan {
public:
    explicit DirectionScan(std::size_t d) : d_(d), cur_(d, 0) {}

    Point next() {
        for (;;) {
            if (!advance()) {
                ++radius_;
                std::fill(cur_.begin(), cur_.end(), -radius_);
            }
            if (max_abs() == radius_) {
                Point p;
                for (long c : cur_) p.push_back(Scalar(c));
                return p;
            }
        }
    }

    long radius() const { return radius_; }

private:
    bool advance() {
        if (radius_ == 0) return false;
        for (std::size_t i = d_; i-- > 0;) {
            if (cur_[i] < radius_) {
                ++cur_[i];
                return true;
            }
            cur_[i] = -radius_;
        }
        return false;
    }

    long max_abs() const {
        long m = 0;
        for (long c : cur_) m = std::max(m, c < 0 ? -c : c);
        return m;
    }

    std::size_t d_;
    std::vector<long> cur_;
    long radius_ = 0;
};

struct FinalStep {
    Point eta;
    std::vector<Point> generators;
};

// For a full-dimensional P in R^d: eta with unique extreme vertices u1, u2,
// and a box zonotope Z' in eta-perp with P inside [u1, u2] + Z'.
FinalStep final_step(const Polytope& p, const Scalar& margin, const GeneratorFilter& accept) {
    const std::size_t d = p.ambient_dim();
    DirectionScan scan(d);
    for (;;) {
        Point eta = scan.next();
        require(scan.radius() <= 64, ErrorKind::Budget, "no admissible direction found");
        const SupportResult hi = support(p, eta);
        if (hi.vertex_ids.size() != 1) continue;
        const SupportResult lo = support(p, -eta);
        if (lo.vertex_ids.size() != 1) continue;

        const Point& u1 = p.vertices()[hi.vertex_ids[0]];
        const Point& u2 = p.vertices()[lo.vertex_ids[0]];
        const Matrix basis = nullspace(Matrix{eta}, d);
        Matrix gram(basis.size(), Point(basis.size()));
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) gram[i][j] = dot(basis[i], basis[j]);

        std::vector<Scalar> extent(basis.size(), Scalar(0));
        const Scalar top = dot(eta, u1), span = top - dot(eta, u2);
        for (const auto& x : p.vertices()) {
            const Scalar s = (top - dot(eta, x)) / span;
            const Point r = x - u1 - s * (u2 - u1);
            Point rhs(basis.size());
            for (std::size_t i = 0; i < basis.size(); ++i) rhs[i] = dot(basis[i], r);
            const Point coords = *solve(gram, rhs);
            for (std::size_t i = 0; i < basis.size(); ++i) extent[i] = std::max(extent[i], Scalar(abs(coords[i])));
        }
        FinalStep out{std::move(eta), {}};
        bool ok = true;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Point g = (extent[i] + margin) * basis[i];
            ok = ok && accept(g);
            out.generators.push_back(std::move(g));
        }
        if (ok) return out;
    }
}

Polytope add_generators(Polytope p, const std::vector<Point>& gens) {
    for (const auto& g : gens) p = add_segment(p, Segment{-g, g});
    return p;
}

Augmentation augment_impl(const Polytope& p, const Scalar& margin, const GeneratorFilter& accept,
                          const RunConfig& cfg) {
    const std::size_t n = p.ambient_dim();
    const int d = p.dim();
    require(d <= 3, ErrorKind::DimensionCap, "zonotope augmentation supports dim <= 3");
    Augmentation out{Zonotope{zero_point(n), {}}, Zonotope{zero_point(n), {}}, zero_point(n), p};
    if (d <= 1) return out;

    if (!p.is_full_dimensional()) {
        // Work in intrinsic coordinates and map generators back.
        const AffineHull& aff = p.affine_hull();
        const Polytope local = convex_hull(p.body().vertices);
        auto lifted = [&](const Point& g) { return aff.direction_from_intrinsic(g); };
        Augmentation in = augment_impl(local, margin, [&](const Point& g) { return accept(lifted(g)); }, cfg);
        for (const auto& g : in.face_part.generators) out.face_part.generators.push_back(lifted(g));
        for (const auto& g : in.zonotope.generators) out.zonotope.generators.push_back(lifted(g));
        out.eta = zero_point(n);
        for (std::size_t k = 0; k < aff.pivots().size(); ++k) out.eta[aff.pivots()[k]] = in.eta[k];
        out.sum = add_generators(p, out.zonotope.generators);
        return out;
    }

    Polytope prime = p;
    if (d == 3) {
        for (auto idx : faces_of_dim(p, 2)) {
            const Polytope f = p.sub(p.faces()[idx].vertex_ids);
            if (is_vg(f, Scalar(1, 2), cfg).vg) continue;
            Augmentation fa = augment_impl(f, margin, [](const Point&) { return true; }, cfg);
            for (auto& g : fa.zonotope.generators) out.face_part.generators.push_back(std::move(g));
        }
        prime = add_generators(p, out.face_part.generators);
    }
    FinalStep fs = final_step(prime, margin, accept);
    out.eta = std::move(fs.eta);
    out.zonotope.generators = out.face_part.generators;
    out.zonotope.generators.insert(out.zonotope.generators.end(), fs.generators.begin(), fs.generators.end());
    out.sum = add_generators(prime, fs.generators);
    require(is_vg(out.sum, Scalar(1, 2), cfg).vg, ErrorKind::Verification, "augmented polytope failed verification");
    return out;
}

// Vertices of a planar polygon in counter-clockwise order.
std::vector<Point> ccw_vertices(const Polytope& p) {
    std::vector<Point> vs = p.vertices();
    const Point c = p.center();
    auto half = [&](const Point& v) {
        const Scalar dy = v[1] - c[1], dx = v[0] - c[0];
        return sgn(dy) > 0 || (sgn(dy) == 0 && sgn(dx) > 0) ? 0 : 1;
    };
    std::sort(vs.begin(), vs.end(), [&](const Point& a, const Point& b) {
        const int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        const Scalar cross = (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]);
        return sgn(cross) > 0;
    });
    return vs;
}

// Hull of P's edges bulged outward along affine images of a rational circle arc.
Polytope bulged(const std::vector<Point>& ring, int per_arc, const Scalar& h) {
    const Scalar tau(1, 2);
    const Scalar c = (1 - tau * tau) / (1 + tau * tau);
    const Scalar s = 2 * tau / (1 + tau * tau);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % ring.size()];
        const Point dir = b - a;
        const Point normal{dir[1], -dir[0]};
        const Point mid = Scalar(1, 2) * (a + b);
        for (int j = 0; j <= per_arc; ++j) {
            const Scalar t = -tau + 2 * tau * j / per_arc;
            const Scalar x = (1 - t * t) / (1 + t * t), y = 2 * t / (1 + t * t);
            const Scalar out_w = (x - c) / (1 - c) * h;
            const Scalar along = y / s / 2;
            pts.push_back(mid + out_w * normal + along * dir);
        }
    }
    return convex_hull(std::move(pts));
}

}  // namespace

PointCloud series_partial_sum(const Polytope& p, const Scalar& lambda, int k, const RunConfig& cfg) {
    require(sgn(lambda) > 0 && lambda <= Scalar(1, 2), ErrorKind::InvalidArgument, "lambda must lie in (0, 1/2]");
    require(k >= 0, ErrorKind::InvalidArgument, "level must be nonnegative");
    PointCloud cloud{{}, k, lambda};
    for (const auto& v : p.vertices()) cloud.points.push_back(lambda * v);
    dedupe(cloud.points);
    Scalar factor = lambda;
    for (int i = 1; i <= k; ++i) {
        factor *= 1 - lambda;
        if (cloud.points.size() * p.vertex_count() > cfg.point_budget)
            fail(ErrorKind::Budget, "point cloud budget exceeded");
        std::vector<Point> next;
        next.reserve(cloud.points.size() * p.vertex_count());
        for (const auto& s : cloud.points)
            for (const auto& v : p.vertices()) next.push_back(s + factor * v);
        dedupe(next);
        cloud.points = std::move(next);
    }
    return cloud;
}

NetCertificate covering_net(const Polytope& p, const Scalar& lambda, int k, const RunConfig& cfg) {
    require(k >= 0, ErrorKind::InvalidArgument, "level must be nonnegative");
    NetCertificate net;
    net.k = k;
    net.lambda = lambda;
    if (!is_vg(p, lambda, cfg).vg) {
        net.lambda = Scalar(1, p.dim() + 1);
        net.clamped = true;
    }
    const Scalar a = 1 - net.lambda;
    net.scale = power(a, k);
    if (k == 0) {
        net.centers.push_back(zero_point(p.ambient_dim()));
    } else {
        net.centers = series_partial_sum(p, net.lambda, k - 1, cfg).points;
    }
    net.bound = power(Scalar(static_cast<unsigned long>(p.vertex_count())), k);
    net.volume_bound = power(1 / net.scale, p.dim());
    std::vector<Polytope> pieces;
    pieces.reserve(net.centers.size());
    for (const auto& c : net.centers) pieces.push_back(p.scaled(net.scale, c));
    net.verified = covers(p, pieces, cfg.cell_budget).covered;
    require(net.verified, ErrorKind::Verification, "covering net failed verification");
    return net;
}

Augmentation augment_to_vg(const Polytope& p, const RunConfig& cfg) {
    return augment_impl(p, Scalar(1), [](const Point&) { return true; }, cfg);
}

Densified densify2d(const Polytope& p, const Scalar& eps, const RunConfig& cfg) {
    require(sgn(eps) > 0, ErrorKind::InvalidArgument, "eps must be positive");
    require(p.ambient_dim() == 2 && p.is_full_dimensional(), ErrorKind::Precondition,
            "densification needs a full-dimensional planar polygon");
    Densified out{p, false, 0, 0, 0, 0, std::nullopt};
    if (is_centrally_symmetric(p) || is_vg(p, Scalar(1, 2), cfg).vg) {
        out.verified = true;
        return out;
    }

    const auto ring = ccw_vertices(p);
    Scalar longest = 0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point d = ring[(i + 1) % ring.size()] - ring[i];
        longest = std::max(longest, Scalar(abs(d[0]) + abs(d[1])));
    }
    // Outward offset of each apex is h * |edge| <= eps / 2.
    const Scalar h0 = eps / (2 * longest);
    const Scalar eps_sq = eps * eps;

    struct Attempt {
        int per_arc;
        Scalar h;
    };
    std::vector<Attempt> schedule;
    for (int r = 0; r < cfg.retry_budget; ++r) {
        const int doublings = (r + 1) / 2, halvings = r / 2;
        schedule.push_back(Attempt{4 << doublings, h0 / Scalar(mpz_class(1) << halvings)});
    }

    struct Outcome {
        Polytope q;
        bool ok;
        Scalar hd;
        Scalar defect;
    };
    const int workers = worker_count(cfg.parallelism);
    std::optional<Outcome> best;
    int best_index = -1;
    for (std::size_t start = 0; start < schedule.size(); start += static_cast<std::size_t>(workers)) {
        const std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(workers), schedule.size() - start);
        auto results = parallel_map(count, workers, [&](std::size_t i) {
            const Attempt& at = schedule[start + i];
            Polytope q = bulged(ring, at.per_arc, at.h);
            Scalar hd = hausdorff_sq(p, q);
            if (hd > eps_sq) return Outcome{q, false, hd, Scalar(-1)};
            DefectReport d = defect(q, Scalar(1, 2), cfg);
            return Outcome{q, sgn(d.volume) == 0, hd, d.volume};
        });
        for (std::size_t i = 0; i < results.size(); ++i) {
            auto& r = results[i];
            out.attempts = static_cast<int>(start + i) + 1;
            if (r.ok) {
                out.q = std::move(r.q);
                out.verified = true;
                out.hausdorff_sq = r.hd;
                out.points_per_arc = schedule[start + i].per_arc;
                out.bulge = schedule[start + i].h;
                return out;
            }
            if (sgn(r.defect) > 0 && (!best || r.defect < best->defect)) {
                best = r;
                best_index = static_cast<int>(start + i);
            }
        }
    }
    if (best) {
        out.q = best->q;
        out.hausdorff_sq = best->hd;
        out.points_per_arc = schedule[static_cast<std::size_t>(best_index)].per_arc;
        out.bulge = schedule[static_cast<std::size_t>(best_index)].h;
        out.defect = defect(out.q, Scalar(1, 2), cfg);
    }
    return out;
}

Polytope lift_symmetric(const Polytope& p) {
    std::vector<Point> pts;
    for (const auto& v : p.vertices()) {
        Point up = v, down = -v;
        up.push_back(1);
        down.push_back(-1);
        pts.push_back(std::move(up));
        pts.push_back(std::move(down));
    }
    return convex_hull(std::move(pts));
}

DecoratedLift lift_symmetric_decorated(const Polytope& p, const Scalar& lambda, const RunConfig& cfg) {
    const std::size_t n = p.ambient_dim();
    require(n <= 2, ErrorKind::DimensionCap, "decorated lift supports dimension <= 2");
    require(p.is_full_dimensional(), ErrorKind::Precondition, "decorated lift needs a full-dimensional polytope");
    require(is_vg(p, lambda, cfg).vg, ErrorKind::Precondition, "polytope is not lambda-vertex generated");
    const Polytope base = lift_symmetric(p);

    // Side faces meet both x_{n+1} = 1 and x_{n+1} = -1.
    std::vector<Polytope> sides;
    for (int k = 2; k < base.dim(); ++k) {
        for (auto idx : faces_of_dim(base, k)) {
            bool up = false, down = false;
            for (auto v : base.faces()[idx].vertex_ids) {
                (sgn(base.vertices()[v][n]) > 0 ? up : down) = true;
            }
            if (up && down) sides.push_back(base.sub(base.faces()[idx].vertex_ids));
        }
    }

    DecoratedLift out{base, {}, false, false, 0};
    auto off_horizontal = [n](const Point& g) { return sgn(g[n]) != 0; };
    for (int attempt = 0; attempt < cfg.retry_budget; ++attempt) {
        out.attempts = attempt + 1;
        out.decorations.clear();
        Polytope q = base;
        for (const auto& f : sides) {
            if (is_vg(f, lambda, cfg).vg) continue;
            Augmentation a = augment_impl(f, Scalar(attempt + 1), off_horizontal, cfg);
            q = add_generators(q, a.zonotope.generators);
            out.decorations.push_back(std::move(a.zonotope));
        }
        if (is_vg(q, lambda, cfg).vg) {
            out.q = std::move(q);
            out.verified = true;
            break;
        }
    }
    require(out.verified, ErrorKind::Budget, "decorated lift retry budget exhausted");

    Point up = zero_point(n + 1);
    up[n] = 1;
    const Polytope top = support(out.q, up).face;
    std::vector<Point> flat;
    for (const auto& v : top.vertices()) flat.push_back(Point(v.begin(), v.end() - 1));
    const Polytope top_flat = convex_hull(std::move(flat));
    out.top_is_translate = top_flat.translated(p.center() - top_flat.center()) == p;
    return out;
}

Scalar local_radius_sq(const Polytope& p, const Point& u) {
    require(p.ambient_dim() == 2 && p.is_full_dimensional(), ErrorKind::Precondition,
            "local radius needs a full-dimensional planar polygon");
    require(p.contains(u) && !p.contains_relint(u), ErrorKind::Precondition, "point is not on the boundary");
    std::optional<Scalar> best;
    for (auto idx : faces_of_dim(p, 1)) {
        const auto& ids = p.faces()[idx].vertex_ids;
        const Point& a = p.vertices()[ids[0]];
        const Point& b = p.vertices()[ids[1]];
        const Point d = b - a;
        Scalar t = dot(u - a, d) / dot(d, d);
        if (sgn(t) < 0) t = 0;
        if (t > 1) t = 1;
        const Scalar dist = squared_distance(u, a + t * d);
        if (sgn(dist) == 0) continue;  // u lies on this edge
        if (!best || dist < *best) best = dist;
    }
    require(best.has_value(), ErrorKind::Internal, "no edge avoids the point");
    return *best / 4;
}

}  // namespace vergen
