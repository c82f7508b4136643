#pragma once

#include "vergen/halfspace.hpp"
#include "vergen/index_set.hpp"

#include <optional>
#include <vector>

namespace vergen {

/**
 * A full-dimensional convex polytope in R^dim carrying both descriptions:
 * irredundant facet halfspaces and the vertex list, plus the vertex-facet
 * incidence. Region cells and the intrinsic representation of every
 * Polytope are Bodies.
 *
 * Vertices are sorted lexicographically and facets in canonical halfspace
 * order, so two equal bodies compare equal member-wise.
 */
struct Body {
    std::size_t dim = 0;
    std::vector<HalfSpace> facets;
    std::vector<Point> vertices;
    std::vector<IndexSet> incidence;  ///< per vertex, the facets tight at it

    /// Hull of points spanning R^dim (dim = point length).
    static Body from_points(std::vector<Point> points);

    /// Rebuilds incidence and canonical ordering from facets and vertices.
    static Body assemble(std::size_t dim, std::vector<HalfSpace> facets, std::vector<Point> vertices);

    bool contains(const Point& x) const;
    bool contains_strictly(const Point& x) const;

    /// Vertex average; always an interior point.
    Point interior_point() const;

    Scalar volume() const;

    /// scale * B + shift, scale > 0.
    Body scaled(const Scalar& scale, const Point& shift) const;

    /// Vertices of the smallest face containing both, read off incidence.
    IndexSet face_closure(const IndexSet& vertex_ids) const;

    /// Vertex set of facet j.
    IndexSet facet_vertices(std::size_t j) const;

    bool adjacent(std::size_t u, std::size_t w) const;
};

struct SplitResult {
    std::optional<Body> below;  ///< B intersected with {h <= 0}, if full-dimensional
    std::optional<Body> above;  ///< B intersected with {h >= 0}, if full-dimensional
};

/// Cuts a body by the hyperplane of h using only the vertex/edge structure.
SplitResult split(const Body& body, const HalfSpace& h);

}  // namespace vergen
