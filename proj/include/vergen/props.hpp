#pragma once

#include "vergen/config.hpp"
#include "vergen/json_io.hpp"

#include <string>
#include <vector>

namespace vergen {

/// Names accepted by run_props besides "all".
const std::vector<std::string>& props_suites();

/**
 * Runs `cases` seeded random cases of one property suite (or every suite
 * for "all"). Cases are sharded across workers; the report lists results
 * in case order and is identical for identical seeds.
 *
 * Report: {"suite", "cases", "seed", "passed", "failed", "errors",
 *          "properties": {name: {"passed", "failed"}}, "failures": [...],
 *          "verdict"}; "all" nests the per-suite reports under "suites".
 */
Json run_props(const std::string& suite, std::size_t cases, const RunConfig& cfg = {});

}  // namespace vergen
