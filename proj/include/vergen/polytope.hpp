#pragma once

#include "vergen/affine_hull.hpp"
#include "vergen/body.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace vergen {

/// A face recorded by dimension and the indices of its vertices in the parent.
struct Face {
    int dim = 0;
    std::vector<std::size_t> vertex_ids;

    bool operator==(const Face& other) const = default;
};

/**
 * Convex polytope in R^n, possibly lower-dimensional. The vertex list is
 * the set of extreme points; the H-representation lives in the intrinsic
 * Body over the affine hull, and the face lattice is built on first use.
 *
 * Values are immutable once constructed and safe to share across threads.
 */
class Polytope {
public:
    /// Convex hull of a finite point set (all of one dimension).
    static Polytope hull(std::vector<Point> points);

    /// Polytope from a body expressed in the intrinsic coordinates of `aff`.
    static Polytope from_intrinsic(AffineHull aff, Body body);

    std::size_t ambient_dim() const { return aff_.ambient_dim(); }
    int dim() const { return static_cast<int>(aff_.dim()); }
    bool is_full_dimensional() const { return aff_.is_full(); }

    /// Vertex i corresponds to body().vertices[i].
    const std::vector<Point>& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }

    const AffineHull& affine_hull() const { return aff_; }
    const Body& body() const { return body_; }

    /// Facet inequalities in ambient coordinates (relative to the affine hull).
    std::vector<HalfSpace> facets() const;
    /// Facet inequalities plus both sides of every affine-hull equation.
    std::vector<HalfSpace> halfspaces() const;

    bool contains(const Point& x) const;
    /// Inside the relative interior.
    bool contains_relint(const Point& x) const;

    /// All nonempty faces including P itself, sorted by (dim, vertex ids).
    const std::vector<Face>& faces() const;

    /// Convex hull of a subset of vertices.
    Polytope sub(const std::vector<std::size_t>& vertex_ids) const;

    Point center() const { return centroid(vertices_); }

    /// scale * P + shift (scale > 0).
    Polytope scaled(const Scalar& scale, const Point& shift) const;

    Polytope translated(const Point& shift) const { return scaled(Scalar(1), shift); }

    /// Vertices in lexicographic order (serialization order).
    std::vector<Point> sorted_vertices() const;

    /// Same point set.
    bool operator==(const Polytope& other) const;

private:
    Polytope() = default;

    struct Cache;
    AffineHull aff_;
    Body body_;
    std::vector<Point> vertices_;
    std::shared_ptr<Cache> cache_;
};

/// convex_hull: extreme points of the input set.
inline Polytope convex_hull(std::vector<Point> points) { return Polytope::hull(std::move(points)); }

/// Double-description conversion of an H-representation in R^n. Returns
/// nullopt for an infeasible (empty) system; throws Unbounded for unbounded ones.
std::optional<Polytope> h_to_v(const std::vector<HalfSpace>& halfspaces, std::size_t n);

/// Irredundant H-representation; equalities appear as opposite halfspace pairs.
std::vector<HalfSpace> v_to_h(const Polytope& p);

struct SupportResult {
    Scalar value;
    std::vector<std::size_t> vertex_ids;  ///< argmax vertices of <u, .>
    Polytope face;                        ///< F_u(P)
};

/// h_P(u) and F_u(P). Throws on u = 0.
SupportResult support(const Polytope& p, const Point& u);

/// All k-faces as polytopes, 0 <= k <= dim(P).
std::vector<Polytope> k_skeleton(const Polytope& p, int k);

/// Indices into p.faces() of the faces with the given dimension.
std::vector<std::size_t> faces_of_dim(const Polytope& p, int k);

/// Center c with V(P) = 2c - V(P), if any.
std::optional<Point> is_centrally_symmetric(const Polytope& p);

/// Index of the face of p whose vertex set equals that of f, if f is a face.
std::optional<std::size_t> find_face(const Polytope& p, const Polytope& f);

}  // namespace vergen
