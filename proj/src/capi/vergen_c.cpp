#include "vergen.h"

#include "vergen/constructions.hpp"
#include "vergen/error.hpp"
#include "vergen/instances.hpp"
#include "vergen/json_io.hpp"
#include "vergen/metric.hpp"
#include "vergen/props.hpp"
#include "vergen/svg.hpp"
#include "vergen/vg.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct vg_polytope {
    vergen::Polytope p;
};

namespace {

using namespace vergen;

thread_local std::string g_last_error;

vg_status status_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return VG_ERR_INVALID_ARGUMENT;
        case ErrorKind::Parse: return VG_ERR_PARSE;
        case ErrorKind::DimensionMismatch: return VG_ERR_DIMENSION_MISMATCH;
        case ErrorKind::EmptyInput: return VG_ERR_EMPTY;
        case ErrorKind::Unbounded: return VG_ERR_UNBOUNDED;
        case ErrorKind::Precondition: return VG_ERR_PRECONDITION;
        case ErrorKind::Budget: return VG_ERR_BUDGET;
        case ErrorKind::Verification: return VG_ERR_VERIFICATION;
        case ErrorKind::DimensionCap: return VG_ERR_DIMENSION_CAP;
        case ErrorKind::Internal: return VG_ERR_INTERNAL;
    }
    return VG_ERR_INTERNAL;
}

// Runs f, translating every exception into a status code plus message.
template <class F>
vg_status guard(F&& f) {
    try {
        f();
        g_last_error.clear();
        return VG_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const nlohmann::json::exception& e) {
        g_last_error = std::string("malformed JSON: ") + e.what();
        return VG_ERR_PARSE;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return VG_ERR_BUDGET;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return VG_ERR_INTERNAL;
    }
}

char* copy_out(const std::string& s) {
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return buf;
}

void emit(const Json& j, char** out) { *out = copy_out(j.dump()); }

void need(const void* ptr, const char* what) {
    require(ptr != nullptr, ErrorKind::InvalidArgument, std::string("null argument: ") + what);
}

const Polytope& get(const vg_polytope* p) {
    need(p, "polytope");
    return p->p;
}

vg_polytope* wrap(Polytope p) { return new vg_polytope{std::move(p)}; }

Scalar rational(const char* text, const char* what) {
    need(text, what);
    return parse_scalar(text);
}

RunConfig to_config(const vg_config* c) {
    RunConfig cfg;
    if (!c) return cfg;
    cfg.seed = c->seed;
    if (c->tol) cfg.tol = parse_scalar(c->tol);
    require(sgn(cfg.tol) > 0, ErrorKind::InvalidArgument, "tolerance must be positive");
    require(c->cell_budget > 0 && c->point_budget > 0 && c->retry_budget > 0, ErrorKind::InvalidArgument,
            "budgets must be positive");
    cfg.cell_budget = c->cell_budget;
    cfg.point_budget = c->point_budget;
    cfg.retry_budget = c->retry_budget;
    cfg.parallelism = c->parallelism > 0 ? c->parallelism : 1;
    return cfg;
}

Matrix matrix_from_json(const char* text) {
    need(text, "matrix");
    const Json j = parse_json_text(text);
    require(j.is_array() && !j.empty(), ErrorKind::Parse, "matrix must be a nonempty array of rows");
    Matrix m;
    for (const auto& row : j) m.push_back(point_from_json(row));
    for (const auto& row : m)
        require(row.size() == m.size(), ErrorKind::DimensionMismatch, "matrix must be square");
    return m;
}

Segment segment_from_json(const char* text) {
    need(text, "segment");
    const Json j = parse_json_text(text);
    require(j.is_object() && j.contains("a") && j.contains("b"), ErrorKind::Parse,
            "segment must be {\"a\": [...], \"b\": [...]}");
    return Segment{point_from_json(j.at("a")), point_from_json(j.at("b"))};
}

Json opt_point(const std::optional<Point>& p) { return p ? point_to_json(*p) : Json(nullptr); }

Json points_json(const std::vector<Point>& pts) {
    Json a = Json::array();
    for (const auto& p : pts) a.push_back(point_to_json(p));
    return a;
}

Json bracket_json(const LambdaBracket& b) {
    return Json{{"lo", scalar_to_json(b.lo)},
                {"hi", scalar_to_json(b.hi)},
                {"lo_certified", b.lo_certified},
                {"hi_certified", b.hi_certified},
                {"c_lo", scalar_to_json(b.c_lo())},
                {"c_hi", scalar_to_json(b.c_hi())},
                {"probes", b.probes}};
}

Json zonotope_json_or_null(const Zonotope& z) { return z.center.empty() ? Json(nullptr) : zonotope_to_json(z); }

}  // namespace

extern "C" {

void vg_config_default(vg_config* cfg) {
    if (!cfg) return;
    const RunConfig d;
    cfg->seed = d.seed;
    cfg->tol = nullptr;
    cfg->cell_budget = d.cell_budget;
    cfg->point_budget = d.point_budget;
    cfg->retry_budget = d.retry_budget;
    cfg->parallelism = d.parallelism;
}

const char* vg_last_error(void) { return g_last_error.c_str(); }

const char* vg_status_name(vg_status status) {
    switch (status) {
        case VG_OK: return "ok";
        case VG_ERR_INVALID_ARGUMENT: return "invalid argument";
        case VG_ERR_PARSE: return "parse error";
        case VG_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
        case VG_ERR_EMPTY: return "empty input";
        case VG_ERR_UNBOUNDED: return "unbounded";
        case VG_ERR_PRECONDITION: return "precondition failed";
        case VG_ERR_BUDGET: return "budget exceeded";
        case VG_ERR_VERIFICATION: return "verification failed";
        case VG_ERR_DIMENSION_CAP: return "dimension not supported";
        case VG_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

void vg_string_free(char* s) { std::free(s); }

vg_status vg_polytope_from_json(const char* json, vg_polytope** out) {
    return guard([&] {
        need(json, "json");
        need(out, "out");
        *out = wrap(polytope_from_json(parse_json_text(json)));
    });
}

vg_status vg_polytope_to_json(const vg_polytope* p, int with_halfspaces, char** out) {
    return guard([&] {
        need(out, "out");
        emit(polytope_to_json(get(p), with_halfspaces != 0), out);
    });
}

void vg_polytope_destroy(vg_polytope* p) { delete p; }

size_t vg_polytope_ambient_dim(const vg_polytope* p) { return p ? p->p.ambient_dim() : 0; }
int vg_polytope_dim(const vg_polytope* p) { return p ? p->p.dim() : -1; }
size_t vg_polytope_vertex_count(const vg_polytope* p) { return p ? p->p.vertex_count() : 0; }

vg_status vg_minkowski_sum(const vg_polytope* p, const vg_polytope* q, vg_polytope** out) {
    return guard([&] {
        need(out, "out");
        *out = wrap(minkowski_sum(get(p), get(q)));
    });
}

vg_status vg_add_segment(const vg_polytope* p, const char* segment_json, vg_polytope** out) {
    return guard([&] {
        need(out, "out");
        *out = wrap(add_segment(get(p), segment_from_json(segment_json)));
    });
}

vg_status vg_zonotope(const char* zonotope_json, vg_polytope** out) {
    return guard([&] {
        need(zonotope_json, "zonotope");
        need(out, "out");
        *out = wrap(zonotope_to_polytope(zonotope_from_json(parse_json_text(zonotope_json))));
    });
}

vg_status vg_linear_image(const vg_polytope* p, const char* matrix_json, vg_polytope** out) {
    return guard([&] {
        need(out, "out");
        *out = wrap(linear_image(get(p), matrix_from_json(matrix_json)));
    });
}

vg_status vg_generate(const char* shape, int dim, uint64_t seed, vg_polytope** out) {
    return guard([&] {
        need(shape, "shape");
        need(out, "out");
        require(dim > 0, ErrorKind::InvalidArgument, "dimension must be positive");
        *out = wrap(generate_shape(shape, static_cast<std::size_t>(dim), seed));
    });
}

vg_status vg_check_vg(const vg_polytope* p, const char* lambda, const vg_config* cfg, char** out) {
    return guard([&] {
        need(out, "out");
        const Scalar l = rational(lambda, "lambda");
        const VgResult r = is_vg(get(p), l, to_config(cfg));
        Json j{{"verdict", r.vg}, {"lambda", scalar_to_json(l)}};
        if (r.witness) j["witness"] = point_to_json(*r.witness);
        emit(j, out);
    });
}

vg_status vg_lambda(const vg_polytope* p, const vg_config* cfg, char** out) {
    return guard([&] {
        need(out, "out");
        const RunConfig c = to_config(cfg);
        const LambdaBracket b = lambda_of(get(p), c.tol, c);
        emit(Json{{"verdict", b.lo_certified && b.hi_certified}, {"tol", scalar_to_json(c.tol)},
                  {"bracket", bracket_json(b)}},
             out);
    });
}

vg_status vg_defect(const vg_polytope* p, const char* lambda, int with_svg, const vg_config* cfg, char** out) {
    return guard([&] {
        need(out, "out");
        const Polytope& poly = get(p);
        const Scalar l = rational(lambda, "lambda");
        const DefectReport d = defect(poly, l, to_config(cfg));
        Json cells = Json::array();
        std::vector<Polytope> cell_polys;
        for (std::size_t i = 0; i < d.region.size(); ++i) {
            cell_polys.push_back(d.region.cell(i));
            cells.push_back(polytope_to_json(cell_polys.back()));
        }
        Json j{{"verdict", d.volume == 0},
               {"lambda", scalar_to_json(l)},
               {"volume", scalar_to_json(d.volume)},
               {"region", region_to_json(d.region)},
               {"cells", cells},
               {"witness", opt_point(d.witness)}};
        if (const auto convex = d.region.as_convex()) j["convex_region"] = polytope_to_json(*convex);
        if (with_svg) {
            SvgScene scene;
            scene.outline = poly;
            scene.pieces = vg_pieces(poly, l);
            scene.filled = cell_polys;
            scene.witness = d.witness;
            j["svg"] = render_svg(scene);
        }
        emit(j, out);
    });
}

vg_status vg_face_inheritance(const vg_polytope* p, const char* lambda, const vg_config* cfg, char** out) {
    return guard([&] {
        need(out, "out");
        const Polytope& poly = get(p);
        const FaceInheritance r = face_inheritance_check(poly, rational(lambda, "lambda"), to_config(cfg));
        Json faces = Json::array();
        for (const auto& f : r.faces) {
            faces.push_back(Json{{"dim", f.dim},
                                 {"vertices", points_json(poly.sub(poly.faces()[f.face].vertex_ids).sorted_vertices())},
                                 {"contained", f.contained},
                                 {"vg", f.vg},
                                 {"witness", opt_point(f.witness)}});
        }
        Json obstructions = Json::array();
        for (auto idx : r.obstructions) {
            const auto& f = poly.faces()[idx];
            obstructions.push_back(Json{{"dim", f.dim}, {"vertices", points_json(poly.sub(f.vertex_ids).sorted_vertices())}});
        }
        Json j{{"verdict", r.pass}, {"faces", faces}, {"obstructions", obstructions}};
        if (r.counterexample) {
            const auto& f = poly.faces()[*r.counterexample];
            j["counterexample"] = Json{{"dim", f.dim}, {"vertices", points_json(poly.sub(f.vertex_ids).sorted_vertices())}};
        }
        emit(j, out);
    });
}

vg_status vg_symmetric_criterion(const vg_polytope* p, const char* lambda, const vg_config* cfg, char** out) {
    return guard([&] {
        need(out, "out");
        const SymmetricCriterion s = symmetric_boundary_criterion(get(p), rational(lambda, "lambda"), to_config(cfg));
        Json j{{"verdict", s.agree},           {"center", point_to_json(s.center)}, {"symmetric", s.symmetric},
               {"boundary_covered", s.boundary_covered}, {"direct", s.direct},      {"witness", opt_point(s.witness)}};
        if (s.uncovered_facet) j["uncovered_facet"] = *s.uncovered_facet;
        emit(j, out);
    });
}

vg_status vg_vertex_bound(const vg_polytope* p, const char* lambda, const vg_config* cfg, char** out) {
    return guard([&] {
        need(out, "out");
        const VertexBound b = vertex_bound_check(get(p), rational(lambda, "lambda"), to_config(cfg));
        emit(Json{{"verdict", b.pass},
                  {"vertices", b.vertices},
                  {"bound", scalar_to_json(b.bound)},
                  {"equality", b.equality},
                  {"parallelepiped", b.parallelepiped}},
             out);
    });
}

vg_status vg_generic_pair(const vg_polytope* p, const vg_polytope* q, const char* lambda, const vg_config* cfg,
                          char** out) {
    return guard([&] {
        need(out, "out");
        const GenericPair g = generic_pair(get(p), get(q));
        Json j{{"verdict", g.generic}, {"generic", g.generic}};
        if (g.violation) j["violation"] = Json{{"v", point_to_json(g.violation->first)}, {"w", point_to_json(g.violation->second)}};
        if (g.shared) j["shared"] = point_to_json(*g.shared);
        if (lambda) {
            const GenericSum s = generic_sum_check(get(p), get(q), parse_scalar(lambda), to_config(cfg));
            j["sum"] = Json{{"lambda", lambda},
                            {"p_symmetric", s.p_symmetric},
                            {"q_symmetric", s.q_symmetric},
                            {"p_vg", s.p_vg},
                            {"q_vg", s.q_vg},
                            {"preconditions", s.preconditions},
                            {"sum_vg", s.sum_vg},
                            {"pass", s.pass},
                            {"witness", opt_point(s.witness)}};
        }
        emit(j, out);
    });
}

vg_status vg_segment_monotonicity(const vg_polytope* p, const char* segment_json, const char* lambda,
                                  const vg_config* cfg, char** out) {
    return guard([&] {
        need(out, "out");
        const SegmentMonotonicity m = segment_monotonicity_check(get(p), segment_from_json(segment_json),
                                                                 rational(lambda, "lambda"), to_config(cfg));
        emit(Json{{"verdict", m.pass},
                  {"defect_before", scalar_to_json(m.defect_before)},
                  {"defect_after", scalar_to_json(m.defect_after)},
                  {"witness", opt_point(m.witness)}},
             out);
    });
}

vg_status vg_pvap(const vg_polytope* p, const char* matrix_json, const vg_config* cfg, char** out) {
    return guard([&] {
        need(out, "out");
        const Pvap r = pvap_check(get(p), matrix_from_json(matrix_json), 24, to_config(cfg));
        emit(Json{{"verdict", r.holds},
                  {"order", r.order},
                  {"convex", r.convex},
                  {"witness", opt_point(r.witness)},
                  {"vg_half", r.vg_half},
                  {"translate", r.translate},
                  {"translation", opt_point(r.translation)},
                  {"conclusion_holds", r.clause2}},
             out);
    });
}

vg_status vg_skeleton(const vg_polytope* p, int k, int l, const char* mu, const vg_config* cfg, char** out) {
    return guard([&] {
        need(out, "out");
        const Scalar m = rational(mu, "mu");
        const SkeletonResult r = l < 0 ? skeleton_sum_check(get(p), k, m, to_config(cfg))
                                       : skeleton_pair_check(get(p), k, l, m, to_config(cfg));
        Json j{{"verdict", r.covered}, {"k", k}, {"mu", scalar_to_json(m)}, {"pieces", r.pieces},
               {"witness", opt_point(r.witness)}};
        if (l >= 0) j["l"] = l;
        emit(j, out);
    });
}

vg_status vg_critical_dimension(const vg_polytope* p, const vg_config* cfg, char** out) {
    return guard([&] {
        need(out, "out");
        const int k = critical_dimension(get(p), to_config(cfg));
        emit(Json{{"verdict", true}, {"critical_dimension", k}}, out);
    });
}

vg_status vg_simplex_scan(const vg_polytope* p, const vg_config* cfg, char** out) {
    return guard([&] {
        need(out, "out");
        const RunConfig c = to_config(cfg);
        const SimplexScan s = simplex_minimality_scan(get(p), c.tol, c);
        Json j{{"verdict", s.pass}, {"simplex", s.simplex}, {"probe", scalar_to_json(s.probe)}, {"probe_vg", s.probe_vg}};
        if (s.bracket) j["bracket"] = bracket_json(*s.bracket);
        emit(j, out);
    });
}

vg_status vg_distance(const vg_polytope* p, const vg_polytope* q, const char* metric, char** out) {
    return guard([&] {
        need(out, "out");
        need(metric, "metric");
        const std::string m = metric;
        require(m == "dH" || m == "dF", ErrorKind::InvalidArgument, "metric must be dH or dF");
        const Scalar d = m == "dH" ? hausdorff_sq(get(p), get(q)) : dF_sq(get(p), get(q));
        emit(Json{{"verdict", true}, {"metric", m}, {"squared", scalar_to_json(d)}}, out);
    });
}

vg_status vg_augment(const vg_polytope* p, const vg_config* cfg, char** out) {
    return guard([&] {
        need(out, "out");
        const Augmentation a = augment_to_vg(get(p), to_config(cfg));
        Json j = polytope_to_json(a.sum);
        j["verdict"] = true;
        j["zonotope"] = zonotope_json_or_null(a.zonotope);
        j["face_part"] = zonotope_json_or_null(a.face_part);
        j["eta"] = a.eta.empty() ? Json(nullptr) : point_to_json(a.eta);
        emit(j, out);
    });
}

vg_status vg_densify(const vg_polytope* p, const char* eps, const vg_config* cfg, char** out) {
    return guard([&] {
        need(out, "out");
        const Densified d = densify2d(get(p), rational(eps, "eps"), to_config(cfg));
        Json j = polytope_to_json(d.q);
        j["verdict"] = d.verified;
        j["eps"] = eps;
        j["hausdorff_sq"] = scalar_to_json(d.hausdorff_sq);
        j["attempts"] = d.attempts;
        j["points_per_arc"] = d.points_per_arc;
        j["bulge"] = scalar_to_json(d.bulge);
        if (d.defect) {
            j["defect"] = Json{{"volume", scalar_to_json(d.defect->volume)}, {"region", region_to_json(d.defect->region)},
                               {"witness", opt_point(d.defect->witness)}};
        }
        emit(j, out);
    });
}

vg_status vg_lift(const vg_polytope* p, const char* lambda, const vg_config* cfg, char** out) {
    return guard([&] {
        need(out, "out");
        if (!lambda) {
            Json j = polytope_to_json(lift_symmetric(get(p)));
            j["verdict"] = true;
            emit(j, out);
            return;
        }
        const DecoratedLift d = lift_symmetric_decorated(get(p), parse_scalar(lambda), to_config(cfg));
        Json j = polytope_to_json(d.q);
        Json decorations = Json::array();
        for (const auto& z : d.decorations) decorations.push_back(zonotope_to_json(z));
        j["verdict"] = d.verified && d.top_is_translate;
        j["lambda"] = lambda;
        j["decorations"] = decorations;
        j["top_is_translate"] = d.top_is_translate;
        j["attempts"] = d.attempts;
        emit(j, out);
    });
}

vg_status vg_fractal(const vg_polytope* p, const char* lambda, int depth, int with_svg, const vg_config* cfg,
                     char** out) {
    return guard([&] {
        need(out, "out");
        require(depth >= 0, ErrorKind::InvalidArgument, "depth must be nonnegative");
        const PointCloud c = series_partial_sum(get(p), rational(lambda, "lambda"), depth, to_config(cfg));
        Json j{{"verdict", true},
               {"level", c.level},
               {"lambda", scalar_to_json(c.lambda)},
               {"count", c.points.size()},
               {"points", points_json(c.points)}};
        if (with_svg) {
            SvgScene scene;
            scene.outline = get(p);
            scene.points = c.points;
            j["svg"] = render_svg(scene);
        }
        emit(j, out);
    });
}

vg_status vg_net(const vg_polytope* p, const char* lambda, int k, const vg_config* cfg, char** out) {
    return guard([&] {
        need(out, "out");
        require(k >= 0, ErrorKind::InvalidArgument, "k must be nonnegative");
        const NetCertificate n = covering_net(get(p), rational(lambda, "lambda"), k, to_config(cfg));
        emit(Json{{"verdict", n.verified},
                  {"k", n.k},
                  {"lambda", scalar_to_json(n.lambda)},
                  {"clamped", n.clamped},
                  {"scale", scalar_to_json(n.scale)},
                  {"centers", points_json(n.centers)},
                  {"size", n.centers.size()},
                  {"bound", scalar_to_json(n.bound)},
                  {"volume_bound", scalar_to_json(n.volume_bound)}},
             out);
    });
}

vg_status vg_props(const char* suite, size_t cases, const vg_config* cfg, char** out) {
    return guard([&] {
        need(suite, "suite");
        need(out, "out");
        emit(run_props(suite, cases, to_config(cfg)), out);
    });
}

}  // extern "C"
