#pragma once

#include "vergen/scalar.hpp"

#include <vector>

namespace vergen {

/// The closed halfspace { x : <normal, x> <= offset }.
struct HalfSpace {
    Point normal;
    Scalar offset;

    /// <normal, x> - offset; positive means strictly outside.
    Scalar slack(const Point& x) const;
    bool contains(const Point& x) const { return sgn(slack(x)) <= 0; }

    bool operator==(const HalfSpace& other) const = default;
};

/// Positive rescaling so that the first nonzero normal entry has absolute
/// value 1. Throws on a zero normal.
HalfSpace canonical(HalfSpace h);

/// The opposite closed halfspace { x : <normal, x> >= offset }.
HalfSpace flipped(const HalfSpace& h);

bool halfspace_less(const HalfSpace& a, const HalfSpace& b);

}  // namespace vergen
