#pragma once

#include "vergen/minkowski.hpp"
#include "vergen/region.hpp"

#include "json.hpp"

namespace vergen {

using Json = nlohmann::json;

/// Rationals travel as strings "p/q" or "p"; plain JSON integers are accepted on input.
Scalar scalar_from_json(const Json& j);
Json scalar_to_json(const Scalar& s);

Point point_from_json(const Json& j);
Json point_to_json(const Point& p);

HalfSpace halfspace_from_json(const Json& j, std::size_t dim);
Json halfspace_to_json(const HalfSpace& h);

/**
 * {"dim": n, "vertices": [[...], ...], "halfspaces": [{"normal": [...], "offset": ...}]}.
 * Either list may be omitted; when both are present they must describe the same set.
 */
Polytope polytope_from_json(const Json& j);

/// Vertices in lexicographic order; halfspaces (facets and equations) when requested.
Json polytope_to_json(const Polytope& p, bool with_halfspaces = false);

/// {"dim": n, "center": [...], "generators": [[...], ...]}
Zonotope zonotope_from_json(const Json& j);
Json zonotope_to_json(const Zonotope& z);

/// {"dim": n, "cells": [[halfspace, ...], ...]} with each cell in ambient coordinates.
Json region_to_json(const Region& r);

Json parse_json_text(const std::string& text);

}  // namespace vergen
