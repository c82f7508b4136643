#pragma once

#include "vergen/config.hpp"
#include "vergen/minkowski.hpp"
#include "vergen/vg.hpp"

#include <optional>

namespace vergen {

struct PointCloud {
    std::vector<Point> points;  ///< sorted, duplicates removed
    int level = 0;
    Scalar lambda;
};

/// The set sum_{i=0}^{k} (1 - lambda)^i lambda V(P). Throws Budget when an
/// intermediate candidate set would exceed cfg.point_budget points.
PointCloud series_partial_sum(const Polytope& p, const Scalar& lambda, int k, const RunConfig& cfg = {});

struct NetCertificate {
    int k = 0;
    Scalar lambda;        ///< lambda actually used (clamped to 1/(n+1) if needed)
    bool clamped = false;
    Scalar scale;         ///< (1 - lambda)^k
    std::vector<Point> centers;
    Scalar bound;         ///< m^k
    Scalar volume_bound;  ///< vol(P) / vol(scale P) = scale^-n
    bool verified = false;
};

/// Centers c with P inside the union of c + (1 - lambda)^k P.
NetCertificate covering_net(const Polytope& p, const Scalar& lambda, int k, const RunConfig& cfg = {});

struct Augmentation {
    Zonotope zonotope;    ///< Z with P + Z vertex generated
    Zonotope face_part;   ///< sum of the per-face zonotopes (empty below dimension 3)
    Point eta;            ///< direction with unique extreme vertices of P + face_part
    Polytope sum;         ///< P + Z
};

/// Zonotope Z with P + Z in VG(1/2), post-verified. Requires dim P <= 3.
Augmentation augment_to_vg(const Polytope& p, const RunConfig& cfg = {});

struct Densified {
    Polytope q;
    bool verified = false;     ///< is_vg(Q, 1/2) and hausdorff_sq(P, Q) <= eps^2
    Scalar hausdorff_sq;
    int attempts = 0;
    int points_per_arc = 0;
    Scalar bulge;
    std::optional<DefectReport> defect;  ///< for an unverified best candidate
};

/// Planar VG polytope within Hausdorff distance eps of P.
Densified densify2d(const Polytope& p, const Scalar& eps, const RunConfig& cfg = {});

/// conv(P x {1}, -P x {-1}) in one dimension higher.
Polytope lift_symmetric(const Polytope& p);

struct DecoratedLift {
    Polytope q;
    std::vector<Zonotope> decorations;  ///< one per side face that needed one
    bool top_is_translate = false;      ///< F_{e_{n+1}}(Q) is a translate of P
    bool verified = false;
    int attempts = 0;
};

/// Lift plus zonotopes on the side faces so that the result is lambda-VG.
/// Requires P lambda-VG and dim P <= 2.
DecoratedLift lift_symmetric_decorated(const Polytope& p, const Scalar& lambda, const RunConfig& cfg = {});

/// r^2 for the radius r = 1/2 min dist(u, E) over edges E not containing u.
Scalar local_radius_sq(const Polytope& p, const Point& u);

}  // namespace vergen
