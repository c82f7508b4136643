#pragma once

#include "vergen/polytope.hpp"

#include <optional>
#include <string>

namespace vergen {

/// Things to draw. Polytopes of dimension 3 are projected onto the first two axes.
struct SvgScene {
    std::optional<Polytope> outline;   ///< drawn thick, no fill
    std::vector<Polytope> pieces;      ///< stroked
    std::vector<Polytope> filled;      ///< e.g. defect cells
    std::vector<Point> points;         ///< small dots
    std::optional<Point> witness;      ///< marked with a cross
};

/// Standalone SVG document with a fixed 512x512 viewport fitted to the scene.
std::string render_svg(const SvgScene& scene);

}  // namespace vergen
