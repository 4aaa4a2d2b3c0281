#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace toric {

/// Tool version, stamped into machine-readable reports.
inline constexpr const char* kVersion = "0.1.0";

/// Domain error for invalid inputs, violated preconditions and exceeded
/// enumeration bounds.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Hard cap on rays for exhaustive subset enumeration (forbidden sets,
/// primitive collections). Overridable via TORIC_EXC_MAX_RAYS.
inline int max_rays_bound() {
  if (const char* s = std::getenv("TORIC_EXC_MAX_RAYS")) {
    int v = std::atoi(s);
    if (v >= 1 && v <= 26) return v;
  }
  return 16;
}

/// Vertex cap for the Smith-normal-form homology oracle (face lists grow as
/// 2^vertices). Never below the ray bound so forbidden-set fallbacks work.
inline int homology_vertex_bound() {
  int b = max_rays_bound();
  return b > 20 ? b : 20;
}

}  // namespace toric
