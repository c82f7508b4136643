#pragma once

#include "vergen/polytope.hpp"

#include <initializer_list>
#include <string>

namespace testing {

inline vergen::Point pt(std::initializer_list<const char*> coords) {
    vergen::Point p;
    for (const char* c : coords) p.push_back(vergen::parse_scalar(c));
    return p;
}

inline vergen::Scalar q(const char* s) { return vergen::parse_scalar(s); }

inline vergen::Polytope poly(std::initializer_list<std::initializer_list<const char*>> pts) {
    std::vector<vergen::Point> v;
    for (auto p : pts) v.push_back(pt(p));
    return vergen::convex_hull(std::move(v));
}

inline vergen::Polytope unit_square() { return poly({{"0", "0"}, {"1", "0"}, {"0", "1"}, {"1", "1"}}); }
inline vergen::Polytope triangle() { return poly({{"0", "0"}, {"1", "0"}, {"0", "1"}}); }
inline vergen::Polytope cube() {
    return poly({{"0", "0", "0"}, {"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"},
                 {"1", "1", "0"}, {"1", "0", "1"}, {"0", "1", "1"}, {"1", "1", "1"}});
}

}  // namespace testing
