#pragma once

#include "vergen/linalg.hpp"
#include "vergen/minkowski.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace vergen {

Polytope simplex(std::size_t n);        ///< conv{0, e_1, ..., e_n}
Polytope cube(std::size_t n);           ///< [-1, 1]^n
Polytope cross_polytope(std::size_t n); ///< conv{+-e_i}

/**
 * Seeded source of small random rationals: numerators uniform in
 * [-256, 256], denominators in {1..16}. Reduction uses plain modulo on the
 * engine output so sequences are identical across standard libraries.
 */
class Random {
public:
    explicit Random(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [lo, hi].
    long integer(long lo, long hi);
    Scalar rational();
    Point point(std::size_t n);
    Point nonzero_point(std::size_t n);

    /// Full-dimensional hull of `count` random points (redrawn until full).
    Polytope hull(std::size_t n, std::size_t count);
    /// Full-dimensional zonotope with `count` random generators (count >= n).
    Zonotope zonotope(std::size_t n, std::size_t count);
    Segment segment(std::size_t n);

private:
    std::mt19937_64 engine_;
};

/// Per-case seed derived from a run seed and a case index.
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

/// Named shapes for the CLI: simplex, cube, cross, zonotope, random-hull.
Polytope generate_shape(const std::string& shape, std::size_t n, std::uint64_t seed);

/// Finite-order rational matrices in the plane: -Id, quarter turn, order-3 map.
Matrix finite_order_matrix(int which);

}  // namespace vergen
