#include "vergen/halfspace.hpp"

#include "vergen/error.hpp"

#include <algorithm>

namespace vergen {

Scalar HalfSpace::slack(const Point& x) const { return dot(normal, x) - offset; }

HalfSpace canonical(HalfSpace h) {
    auto it = std::find_if(h.normal.begin(), h.normal.end(), [](const Scalar& c) { return sgn(c) != 0; });
    require(it != h.normal.end(), ErrorKind::InvalidArgument, "halfspace normal must be nonzero");
    const Scalar scale = 1 / abs(*it);
    for (auto& c : h.normal) c *= scale;
    h.offset *= scale;
    return h;
}

HalfSpace flipped(const HalfSpace& h) { return HalfSpace{-h.normal, -h.offset}; }

bool halfspace_less(const HalfSpace& a, const HalfSpace& b) {
    if (a.normal != b.normal) return lex_less(a.normal, b.normal);
    return a.offset < b.offset;
}

}  // namespace vergen
