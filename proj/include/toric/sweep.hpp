#pragma once

#include <cstdint>

#include "toric/json_io.hpp"

namespace toric {

struct SweepResult {
  OJson report;
  std::int64_t failures = 0;
};

/// Run the configured checks over a family-parameter grid.
///
/// Config schema (scalars allowed wherever a [lo, hi] range is):
///   {
///     "n": [2, 4], "r": [1, 3], "b": [0, 1], "c": [0, 1],
///     "checks": ["rank", "strongly_exceptional", "diff_acyclic",
///                "thomsen_vs_bondal", "koszul"],
///     "m": [2, 3],       // optional: push-forward orders to compare
///     "window": 3,       // optional: box radius for the koszul check
///     "jobs": 1,         // optional: accepted for config compatibility;
///                        //           execution is sequential
///     "out": "reports"   // optional: directory receiving sweep.json
///   }
///
/// The c range applies to every one of the r-1 twist coordinates
/// independently. The report is deterministic for a given config (timing
/// goes to stderr, not into the report) and carries a version stamp and a
/// config hash.
SweepResult run_sweep(const OJson& config);

}  // namespace toric
