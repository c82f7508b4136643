#include "vergen/svg.hpp"

#include "vergen/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace vergen {
namespace {

constexpr double kSize = 512;
constexpr double kPad = 16;

using Xy = std::pair<double, double>;

Xy project(const Point& p) {
    require(p.size() == 2 || p.size() == 3, ErrorKind::DimensionCap, "svg output needs dimension 2 or 3");
    return {p[0].get_d(), p[1].get_d()};
}

// Boundary cycle of the projected polygon, ordered by angle around the centroid.
std::vector<Xy> outline_of(const Polytope& p) {
    std::vector<Xy> pts;
    for (const auto& v : p.vertices()) pts.push_back(project(v));
    if (pts.size() < 3) return pts;
    double cx = 0, cy = 0;
    for (auto [x, y] : pts) cx += x, cy += y;
    cx /= static_cast<double>(pts.size());
    cy /= static_cast<double>(pts.size());
    std::sort(pts.begin(), pts.end(), [&](Xy a, Xy b) {
        return std::atan2(a.second - cy, a.first - cx) < std::atan2(b.second - cy, b.first - cx);
    });
    if (p.ambient_dim() == 3) {
        // monotone-chain hull of the projection
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        auto cross = [](Xy o, Xy a, Xy b) {
            return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
        };
        std::vector<Xy> h(2 * pts.size());
        std::size_t k = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
            h[k++] = pts[i];
        }
        for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
            while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
            h[k++] = pts[i];
        }
        h.resize(k > 0 ? k - 1 : 0);
        return h;
    }
    return pts;
}

struct Frame {
    double x0 = 0, y0 = 0, scale = 1;

    Xy map(Xy p) const { return {kPad + (p.first - x0) * scale, kSize - kPad - (p.second - y0) * scale}; }
};

Frame fit(const SvgScene& s) {
    double lo_x = INFINITY, lo_y = INFINITY, hi_x = -INFINITY, hi_y = -INFINITY;
    auto take = [&](const Point& p) {
        auto [x, y] = project(p);
        lo_x = std::min(lo_x, x), hi_x = std::max(hi_x, x);
        lo_y = std::min(lo_y, y), hi_y = std::max(hi_y, y);
    };
    if (s.outline)
        for (const auto& v : s.outline->vertices()) take(v);
    for (const auto& list : {&s.pieces, &s.filled})
        for (const auto& p : *list)
            for (const auto& v : p.vertices()) take(v);
    for (const auto& p : s.points) take(p);
    if (s.witness) take(*s.witness);
    Frame f;
    if (!std::isfinite(lo_x)) return f;
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    f.x0 = lo_x;
    f.y0 = lo_y;
    f.scale = (kSize - 2 * kPad) / span;
    return f;
}

void polygon(std::ostringstream& out, const Frame& f, const Polytope& p, const char* style) {
    auto pts = outline_of(p);
    if (pts.empty()) return;
    if (pts.size() == 1) {
        auto [x, y] = f.map(pts[0]);
        out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"2\" " << style << "/>\n";
        return;
    }
    out << "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        auto [x, y] = f.map(pts[i]);
        out << (i ? " " : "") << x << ',' << y;
    }
    out << "\" " << style << "/>\n";
}

}  // namespace

std::string render_svg(const SvgScene& scene) {
    const Frame f = fit(scene);
    std::ostringstream out;
    out.precision(6);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
        << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& p : scene.filled) polygon(out, f, p, "fill=\"#e4572e\" fill-opacity=\"0.6\" stroke=\"#a23b1f\" stroke-width=\"0.5\"");
    for (const auto& p : scene.pieces) polygon(out, f, p, "fill=\"none\" stroke=\"#2e86ab\" stroke-width=\"0.8\"");
    if (scene.outline) polygon(out, f, *scene.outline, "fill=\"none\" stroke=\"black\" stroke-width=\"2\"");
    for (const auto& p : scene.points) {
        auto [x, y] = f.map(project(p));
        out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"1.2\" fill=\"black\"/>\n";
    }
    if (scene.witness) {
        auto [x, y] = f.map(project(*scene.witness));
        out << "<path d=\"M" << x - 6 << ',' << y - 6 << " L" << x + 6 << ',' << y + 6 << " M" << x - 6 << ','
            << y + 6 << " L" << x + 6 << ',' << y - 6 << "\" stroke=\"#c1121f\" stroke-width=\"2\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace vergen
