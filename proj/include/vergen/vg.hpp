#pragma once

#include "vergen/config.hpp"
#include "vergen/linalg.hpp"
#include "vergen/minkowski.hpp"
#include "vergen/region.hpp"

#include <optional>
#include <utility>

namespace vergen {

/// lambda v + (1 - lambda) P for every vertex v.
std::vector<Polytope> vg_pieces(const Polytope& p, const Scalar& lambda);

struct VgResult {
    bool vg = false;
    std::optional<Point> witness;  ///< point of P outside every piece
};

/// P = (1 - lambda) P + lambda V(P)?  Requires 0 < lambda <= 1/2.
VgResult is_vg(const Polytope& p, const Scalar& lambda, const RunConfig& cfg = {});

struct LambdaBracket {
    Scalar lo;
    Scalar hi;
    bool lo_certified = false;
    bool hi_certified = false;
    int probes = 0;

    /// Bounds on c(V(P)) = 1/lambda - 1.
    Scalar c_lo() const { return (1 - hi) / hi; }
    Scalar c_hi() const { return (1 - lo) / lo; }
};

/// Bisection on lambda with dyadic probes until hi - lo <= tol.
LambdaBracket lambda_of(const Polytope& p, const Scalar& tol, const RunConfig& cfg = {});

struct DefectReport {
    Region region;
    Scalar volume;
    std::optional<Point> witness;
};

DefectReport defect(const Polytope& p, const Scalar& lambda, const RunConfig& cfg = {});

struct VertexBound {
    std::size_t vertices = 0;
    Scalar bound;                ///< (1 / (1 - lambda))^n
    bool pass = false;           ///< vertices >= bound
    bool equality = false;
    bool parallelepiped = false; ///< equality case verified as an affine cube
};

/// Requires P full-dimensional and lambda-VG (Precondition otherwise).
VertexBound vertex_bound_check(const Polytope& p, const Scalar& lambda, const RunConfig& cfg = {});

/// Affine image of the cube {0,1}^n whose corners are exactly V(P)?
bool is_affine_cube(const Polytope& p);

struct FaceVerdict {
    std::size_t face = 0;  ///< index into p.faces()
    int dim = 0;
    bool contained = false;  ///< F inside (1 - lambda) P + lambda V(P)
    bool vg = false;
    std::optional<Point> witness;  ///< from is_vg(F) when not VG
};

struct FaceInheritance {
    bool pass = true;                        ///< no contained face fails to be VG
    std::optional<std::size_t> counterexample;
    std::vector<FaceVerdict> faces;          ///< proper faces of dimension >= 1
    std::vector<std::size_t> obstructions;   ///< faces that are not lambda-VG
};

FaceInheritance face_inheritance_check(const Polytope& p, const Scalar& lambda, const RunConfig& cfg = {});

struct SymmetricCriterion {
    Point center;
    bool symmetric = false;          ///< exact central symmetry (else the relaxed form holds)
    bool boundary_covered = false;   ///< every facet inside the union of pieces
    std::optional<std::size_t> uncovered_facet;
    std::optional<Point> witness;
    bool direct = false;             ///< is_vg(P, lambda)
    bool agree = false;
};

/// Throws Precondition unless P is centrally symmetric or -l(P-c) lies in (1-l)(P-c).
SymmetricCriterion symmetric_boundary_criterion(const Polytope& p, const Scalar& lambda, const RunConfig& cfg = {});

struct GenericPair {
    bool generic = true;
    std::optional<std::pair<Point, Point>> violation;  ///< vertices v of P, w of Q
    std::optional<Point> shared;                       ///< nonzero y in both cones
};

GenericPair generic_pair(const Polytope& p, const Polytope& q);

struct GenericSum {
    bool p_symmetric = false, q_symmetric = false;
    bool p_vg = false, q_vg = false;
    bool generic = false;
    bool preconditions = false;
    bool sum_vg = false;
    bool pass = false;  ///< preconditions imply sum_vg
    std::optional<Point> witness;
};

GenericSum generic_sum_check(const Polytope& p, const Polytope& q, const Scalar& lambda, const RunConfig& cfg = {});

struct SegmentMonotonicity {
    bool pass = false;
    Scalar defect_before;  ///< volume of the defect of P
    Scalar defect_after;   ///< volume of the defect of P + l
    std::optional<Point> witness;  ///< in the defect of P + l but not of P
};

/// Defect of P + l inside the defect of P, with l recentered at the origin.
/// Requires every facet of P to be lambda-VG (Precondition otherwise).
SegmentMonotonicity segment_monotonicity_check(const Polytope& p, const Segment& s, const Scalar& lambda,
                                               const RunConfig& cfg = {});

struct Pvap {
    int order = 0;
    bool convex = false;
    std::optional<Point> witness;  ///< in P + AP outside P + V(AP)
    bool vg_half = false;
    bool translate = false;
    std::optional<Point> translation;  ///< x with P = AP + x
    bool clause2 = false;
    bool holds = false;
};

/// Throws Precondition when A^k != Id for all k <= max_order.
Pvap pvap_check(const Polytope& p, const Matrix& a, int max_order = 24, const RunConfig& cfg = {});

struct ErosionMembership {
    bool in_lhs = false;
    bool in_rhs = false;
};

ErosionMembership erosion_membership(const Polytope& p, const Polytope& q, const Scalar& lambda, const Point& x);

struct SkeletonResult {
    bool covered = false;
    std::optional<Point> witness;
    std::size_t pieces = 0;
};

/// P inside the union of (1 - mu) P + mu F over k-faces F?
SkeletonResult skeleton_sum_check(const Polytope& p, int k, const Scalar& mu, const RunConfig& cfg = {});

/// P inside the union of lambda F + (1 - lambda) G over k-faces F and l-faces G?
SkeletonResult skeleton_pair_check(const Polytope& p, int k, int l, const Scalar& lambda, const RunConfig& cfg = {});

/// Smallest k with 2P = skel_k P + skel_{n-k} P.  Requires dim P <= 3.
int critical_dimension(const Polytope& p, const RunConfig& cfg = {});

struct SimplexScan {
    bool simplex = false;
    std::optional<LambdaBracket> bracket;
    Scalar probe;            ///< lambda probed above 1/(n+1)
    bool probe_vg = false;
    bool pass = false;
};

SimplexScan simplex_minimality_scan(const Polytope& p, const Scalar& tol, const RunConfig& cfg = {});

}  // namespace vergen
