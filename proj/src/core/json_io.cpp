#include "vergen/json_io.hpp"

#include "vergen/error.hpp"

#include <algorithm>

namespace vergen {

Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Scalar(mpz_class(std::to_string(j.get<std::uint64_t>())));
        return Scalar(mpz_class(std::to_string(j.get<std::int64_t>())));
    }
    fail(ErrorKind::Parse, "expected a rational string or an integer");
}

Json scalar_to_json(const Scalar& s) { return format_scalar(s); }

Point point_from_json(const Json& j) {
    require(j.is_array(), ErrorKind::Parse, "expected a coordinate array");
    Point p;
    for (const auto& c : j) p.push_back(scalar_from_json(c));
    return p;
}

Json point_to_json(const Point& p) {
    Json a = Json::array();
    for (const auto& c : p) a.push_back(scalar_to_json(c));
    return a;
}

HalfSpace halfspace_from_json(const Json& j, std::size_t dim) {
    require(j.is_object() && j.contains("normal") && j.contains("offset"), ErrorKind::Parse,
            "halfspace needs \"normal\" and \"offset\"");
    HalfSpace h{point_from_json(j.at("normal")), scalar_from_json(j.at("offset"))};
    require(h.normal.size() == dim, ErrorKind::DimensionMismatch, "halfspace normal has the wrong length");
    require(!is_zero(h.normal), ErrorKind::InvalidArgument, "halfspace normal must be nonzero");
    return h;
}

Json halfspace_to_json(const HalfSpace& h) {
    return Json{{"normal", point_to_json(h.normal)}, {"offset", scalar_to_json(h.offset)}};
}

Polytope polytope_from_json(const Json& j) {
    require(j.is_object(), ErrorKind::Parse, "polytope must be a JSON object");
    const bool has_v = j.contains("vertices"), has_h = j.contains("halfspaces");
    require(has_v || has_h, ErrorKind::Parse, "polytope needs \"vertices\" or \"halfspaces\"");

    std::optional<std::size_t> dim;
    if (j.contains("dim")) {
        require(j.at("dim").is_number_unsigned(), ErrorKind::Parse, "\"dim\" must be a nonnegative integer");
        dim = j.at("dim").get<std::size_t>();
    }

    std::optional<Polytope> from_v;
    if (has_v) {
        require(j.at("vertices").is_array(), ErrorKind::Parse, "\"vertices\" must be an array");
        std::vector<Point> pts;
        for (const auto& v : j.at("vertices")) pts.push_back(point_from_json(v));
        require(!pts.empty(), ErrorKind::EmptyInput, "vertex list is empty");
        if (!dim) dim = pts[0].size();
        for (const auto& p : pts)
            require(p.size() == *dim, ErrorKind::DimensionMismatch, "vertex length differs from \"dim\"");
        from_v = convex_hull(std::move(pts));
    }
    if (!has_h) return *from_v;

    require(dim.has_value(), ErrorKind::Parse, "\"dim\" is required with halfspaces only");
    require(j.at("halfspaces").is_array(), ErrorKind::Parse, "\"halfspaces\" must be an array");
    std::vector<HalfSpace> hs;
    for (const auto& h : j.at("halfspaces")) hs.push_back(halfspace_from_json(h, *dim));
    auto from_h = h_to_v(hs, *dim);
    require(from_h.has_value(), ErrorKind::EmptyInput, "halfspace system is infeasible");
    if (from_v) require(*from_v == *from_h, ErrorKind::InvalidArgument, "vertices and halfspaces disagree");
    return *from_h;
}

Json polytope_to_json(const Polytope& p, bool with_halfspaces) {
    Json verts = Json::array();
    for (const auto& v : p.sorted_vertices()) verts.push_back(point_to_json(v));
    Json out{{"dim", p.ambient_dim()}, {"vertices", std::move(verts)}};
    if (with_halfspaces) {
        Json hs = Json::array();
        for (const auto& h : v_to_h(p)) hs.push_back(halfspace_to_json(h));
        out["halfspaces"] = std::move(hs);
    }
    return out;
}

Zonotope zonotope_from_json(const Json& j) {
    require(j.is_object() && j.contains("center"), ErrorKind::Parse, "zonotope needs a \"center\"");
    Zonotope z{point_from_json(j.at("center")), {}};
    if (j.contains("dim")) {
        require(j.at("dim").is_number_unsigned() && j.at("dim").get<std::size_t>() == z.dim(),
                ErrorKind::DimensionMismatch, "center length differs from \"dim\"");
    }
    if (j.contains("generators")) {
        require(j.at("generators").is_array(), ErrorKind::Parse, "\"generators\" must be an array");
        for (const auto& g : j.at("generators")) {
            Point p = point_from_json(g);
            require(p.size() == z.dim(), ErrorKind::DimensionMismatch, "generator length differs from center");
            require(!is_zero(p), ErrorKind::InvalidArgument, "generators must be nonzero");
            z.generators.push_back(std::move(p));
        }
    }
    return z;
}

Json zonotope_to_json(const Zonotope& z) {
    Json gens = Json::array();
    for (const auto& g : z.generators) gens.push_back(point_to_json(g));
    return Json{{"dim", z.dim()}, {"center", point_to_json(z.center)}, {"generators", std::move(gens)}};
}

Json region_to_json(const Region& r) {
    Json cells = Json::array();
    for (std::size_t i = 0; i < r.size(); ++i) {
        Json hs = Json::array();
        for (const auto& h : v_to_h(r.cell(i))) hs.push_back(halfspace_to_json(h));
        cells.push_back(std::move(hs));
    }
    return Json{{"dim", r.affine_hull().ambient_dim()}, {"cells", std::move(cells)}};
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        fail(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace vergen
