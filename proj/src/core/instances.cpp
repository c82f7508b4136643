#include "vergen/instances.hpp"

#include "vergen/error.hpp"

namespace vergen {

Polytope simplex(std::size_t n) {
    std::vector<Point> pts{zero_point(n)};
    for (std::size_t i = 0; i < n; ++i) {
        Point e = zero_point(n);
        e[i] = 1;
        pts.push_back(std::move(e));
    }
    return convex_hull(std::move(pts));
}

Polytope cube(std::size_t n) {
    std::vector<Point> pts;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Point p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = (mask >> i & 1U) ? 1 : -1;
        pts.push_back(std::move(p));
    }
    return convex_hull(std::move(pts));
}

Polytope cross_polytope(std::size_t n) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) {
        Point e = zero_point(n);
        e[i] = 1;
        pts.push_back(e);
        pts.push_back(-e);
    }
    return convex_hull(std::move(pts));
}

long Random::integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
}

Scalar Random::rational() {
    Scalar r(integer(-256, 256), static_cast<unsigned long>(integer(1, 16)));
    r.canonicalize();
    return r;
}

Point Random::point(std::size_t n) {
    Point p(n);
    for (auto& c : p) c = rational();
    return p;
}

Point Random::nonzero_point(std::size_t n) {
    for (;;) {
        Point p = point(n);
        if (!is_zero(p)) return p;
    }
}

Polytope Random::hull(std::size_t n, std::size_t count) {
    require(count > n, ErrorKind::InvalidArgument, "need more than n points for a full-dimensional hull");
    for (;;) {
        std::vector<Point> pts;
        for (std::size_t i = 0; i < count; ++i) pts.push_back(point(n));
        Polytope p = convex_hull(std::move(pts));
        if (p.is_full_dimensional()) return p;
    }
}

Zonotope Random::zonotope(std::size_t n, std::size_t count) {
    require(count >= n, ErrorKind::InvalidArgument, "need at least n generators");
    for (;;) {
        Zonotope z{zero_point(n), {}};
        for (std::size_t i = 0; i < count; ++i) z.generators.push_back(nonzero_point(n));
        if (rank(z.generators, n) == static_cast<int>(n)) return z;
    }
}

Segment Random::segment(std::size_t n) { return Segment{point(n), point(n)}; }

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over the pair
    std::uint64_t z = seed * 0x9e3779b97f4a7c15ULL + index + 1;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Polytope generate_shape(const std::string& shape, std::size_t n, std::uint64_t seed) {
    require(n >= 1 && n <= 4, ErrorKind::DimensionCap, "generated shapes support dimensions 1..4");
    if (shape == "simplex") return simplex(n);
    if (shape == "cube") return cube(n);
    if (shape == "cross") return cross_polytope(n);
    Random rng(seed);
    if (shape == "zonotope") {
        const auto count = static_cast<std::size_t>(rng.integer(static_cast<long>(n), 6));
        return zonotope_to_polytope(rng.zonotope(n, std::max<std::size_t>(count, n)));
    }
    if (shape == "random-hull") return rng.hull(n, n + 1 + static_cast<std::size_t>(rng.integer(0, 5)));
    fail(ErrorKind::InvalidArgument, "unknown shape: " + shape);
}

Matrix finite_order_matrix(int which) {
    switch (which % 3) {
        case 0:
            return Matrix{Point{-1, 0}, Point{0, -1}};
        case 1:
            return Matrix{Point{0, -1}, Point{1, 0}};
        default:
            return Matrix{Point{0, -1}, Point{1, -1}};
    }
}

}  // namespace vergen
