/*
 * vergen: exact rational polytopes and vertex-generation analysis.
 *
 * Conventions
 *   - Polytopes are opaque handles, created by the builder functions and
 *     released with vg_polytope_destroy.
 *   - Rationals cross the boundary as strings ("3", "-7/2").
 *   - Analyses write a JSON document (always with a boolean "verdict") into
 *     *out; release it with vg_string_free.
 *   - Every call returns a vg_status. On failure, vg_last_error() describes
 *     the problem for the calling thread.
 */
#ifndef VERGEN_H
#define VERGEN_H

#include <stddef.h>
#include <stdint.h>

#if defined(VERGEN_BUILD)
#define VG_API __attribute__((visibility("default")))
#else
#define VG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct vg_polytope vg_polytope;

typedef enum vg_status {
    VG_OK = 0,
    VG_ERR_INVALID_ARGUMENT = 1,
    VG_ERR_PARSE = 2,
    VG_ERR_DIMENSION_MISMATCH = 3,
    VG_ERR_EMPTY = 4,
    VG_ERR_UNBOUNDED = 5,
    VG_ERR_PRECONDITION = 6,
    VG_ERR_BUDGET = 7,
    VG_ERR_VERIFICATION = 8,
    VG_ERR_DIMENSION_CAP = 9,
    VG_ERR_INTERNAL = 10
} vg_status;

typedef struct vg_config {
    uint64_t seed;
    const char* tol; /* rational; NULL means 1/1024 */
    size_t cell_budget;
    size_t point_budget;
    int retry_budget;
    int parallelism; /* VERGEN_THREADS overrides */
} vg_config;

VG_API void vg_config_default(vg_config* cfg);

/* Message for the last failing call on this thread ("" if none). */
VG_API const char* vg_last_error(void);
VG_API const char* vg_status_name(vg_status status);
VG_API void vg_string_free(char* s);

/* ---- handles ---- */

VG_API vg_status vg_polytope_from_json(const char* json, vg_polytope** out);
VG_API vg_status vg_polytope_to_json(const vg_polytope* p, int with_halfspaces, char** out);
VG_API void vg_polytope_destroy(vg_polytope* p);

VG_API size_t vg_polytope_ambient_dim(const vg_polytope* p);
VG_API int vg_polytope_dim(const vg_polytope* p);
VG_API size_t vg_polytope_vertex_count(const vg_polytope* p);

/* ---- builders ---- */

VG_API vg_status vg_minkowski_sum(const vg_polytope* p, const vg_polytope* q, vg_polytope** out);
/* segment_json: {"a": [...], "b": [...]} */
VG_API vg_status vg_add_segment(const vg_polytope* p, const char* segment_json, vg_polytope** out);
/* zonotope_json: {"dim": n, "center": [...], "generators": [[...], ...]} */
VG_API vg_status vg_zonotope(const char* zonotope_json, vg_polytope** out);
/* matrix_json: row-major [[...], ...] */
VG_API vg_status vg_linear_image(const vg_polytope* p, const char* matrix_json, vg_polytope** out);
/* shape: simplex | cube | cross | zonotope | random-hull */
VG_API vg_status vg_generate(const char* shape, int dim, uint64_t seed, vg_polytope** out);

/* ---- analyses (JSON verdicts) ---- */

VG_API vg_status vg_check_vg(const vg_polytope* p, const char* lambda, const vg_config* cfg, char** out);
VG_API vg_status vg_lambda(const vg_polytope* p, const vg_config* cfg, char** out);
/* with_svg != 0 adds an "svg" document (2-D and 3-D inputs). */
VG_API vg_status vg_defect(const vg_polytope* p, const char* lambda, int with_svg, const vg_config* cfg,
                           char** out);
VG_API vg_status vg_face_inheritance(const vg_polytope* p, const char* lambda, const vg_config* cfg, char** out);
VG_API vg_status vg_symmetric_criterion(const vg_polytope* p, const char* lambda, const vg_config* cfg,
                                        char** out);
VG_API vg_status vg_vertex_bound(const vg_polytope* p, const char* lambda, const vg_config* cfg, char** out);
/* lambda may be NULL; then only genericity is decided. */
VG_API vg_status vg_generic_pair(const vg_polytope* p, const vg_polytope* q, const char* lambda,
                                 const vg_config* cfg, char** out);
VG_API vg_status vg_segment_monotonicity(const vg_polytope* p, const char* segment_json, const char* lambda,
                                         const vg_config* cfg, char** out);
VG_API vg_status vg_pvap(const vg_polytope* p, const char* matrix_json, const vg_config* cfg, char** out);
/* l < 0: P inside union (1 - mu) P + mu F over k-faces.
   l >= 0: P inside union mu F + (1 - mu) G over k-faces F, l-faces G. */
VG_API vg_status vg_skeleton(const vg_polytope* p, int k, int l, const char* mu, const vg_config* cfg, char** out);
VG_API vg_status vg_critical_dimension(const vg_polytope* p, const vg_config* cfg, char** out);
VG_API vg_status vg_simplex_scan(const vg_polytope* p, const vg_config* cfg, char** out);
/* metric: "dH" (Hausdorff of the polytopes) or "dF" (of the vertex sets); squared values. */
VG_API vg_status vg_distance(const vg_polytope* p, const vg_polytope* q, const char* metric, char** out);

/* ---- constructions (JSON: polytope fields plus a certificate) ---- */

VG_API vg_status vg_augment(const vg_polytope* p, const vg_config* cfg, char** out);
VG_API vg_status vg_densify(const vg_polytope* p, const char* eps, const vg_config* cfg, char** out);
/* lambda NULL: bare symmetric lift; otherwise decorated to be lambda-VG. */
VG_API vg_status vg_lift(const vg_polytope* p, const char* lambda, const vg_config* cfg, char** out);
VG_API vg_status vg_fractal(const vg_polytope* p, const char* lambda, int depth, int with_svg,
                            const vg_config* cfg, char** out);
VG_API vg_status vg_net(const vg_polytope* p, const char* lambda, int k, const vg_config* cfg, char** out);

/* ---- property suites ---- */

/* suite: all | zonotope | segment | faces | symmetric | generic | series | covering | skeleton | simplex */
VG_API vg_status vg_props(const char* suite, size_t cases, const vg_config* cfg, char** out);

#ifdef __cplusplus
}
#endif

#endif /* VERGEN_H */
