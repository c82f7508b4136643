#pragma once

#include "vergen/linalg.hpp"
#include "vergen/polytope.hpp"

namespace vergen {

/// The segment [a, b]; a == b is allowed and acts as a point.
struct Segment {
    Point a;
    Point b;
};

/// center + sum_i [-g_i, g_i]
struct Zonotope {
    Point center;
    std::vector<Point> generators;

    std::size_t dim() const { return center.size(); }
};

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

Polytope add_segment(const Polytope& p, const Segment& s);

Polytope zonotope_to_polytope(const Zonotope& z);

/// Sum of two zonotopes (centers added, generator lists concatenated).
Zonotope operator+(const Zonotope& a, const Zonotope& b);

/// Image under an invertible square matrix; throws on a singular map.
Polytope linear_image(const Polytope& p, const Matrix& a);

Polytope reflect(const Polytope& p);

struct SegmentFace {
    Polytope face;  ///< F + c theta as a face of P + [-c theta, c theta]
    Point witness;  ///< u with F_u(P + [-c theta, c theta]) = F + c theta
};

/**
 * F + c theta is a face of P + [-c theta, c theta] whenever some u in N_P(F)
 * has <u, theta> > 0. Throws Precondition otherwise, and when F is not a face.
 */
SegmentFace face_after_segment_sum(const Polytope& p, const Polytope& f, const Point& theta, const Scalar& c);

}  // namespace vergen
