#pragma once

#include "vergen/halfspace.hpp"

#include <optional>
#include <span>

namespace vergen {

enum class LpStatus { Optimal, Infeasible, Unbounded };

enum class LpMode {
    Maximize,           ///< maximize <objective, x>
    Feasibility,        ///< any x satisfying every constraint
    StrictFeasibility,  ///< x satisfying every constraint strictly
};

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Scalar value;   ///< optimum (Maximize only)
    Point witness;  ///< optimal / feasible point when status == Optimal
};

/**
 * Exact two-phase primal simplex over the rationals with Bland's rule, for
 * free variables x in R^dim subject to <a_i, x> <= b_i.
 *
 * StrictFeasibility reports Infeasible when the system has no point
 * satisfying all constraints strictly (e.g. an empty interior).
 */
LpResult lp(const Point& objective, std::span<const HalfSpace> constraints, LpMode mode);

inline LpResult lp_maximize(const Point& objective, std::span<const HalfSpace> constraints) {
    return lp(objective, constraints, LpMode::Maximize);
}

std::optional<Point> lp_feasible(std::span<const HalfSpace> constraints, std::size_t dim);
std::optional<Point> lp_strictly_feasible(std::span<const HalfSpace> constraints, std::size_t dim);

}  // namespace vergen
