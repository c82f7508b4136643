#pragma once

#include "vergen/scalar.hpp"

#include <cstdint>

namespace vergen {

/// Knobs shared by the analyses, constructions and the CLI.
struct RunConfig {
    std::uint64_t seed = 1;
    Scalar tol{1, 1024};
    std::size_t cell_budget = 1000000;
    std::size_t point_budget = 1000000;
    int retry_budget = 16;
    int parallelism = 1;
};

}  // namespace vergen
