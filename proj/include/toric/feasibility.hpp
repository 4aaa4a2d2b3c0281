#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "toric/bigint.hpp"

namespace toric {

// System of linear inequalities over integer vectors x; every row is stored
// as coefficients c and constant d meaning c.x + d >= 0.
struct IneqSystem {
  int vars = 0;
  std::vector<std::vector<std::int64_t>> coeffs;
  std::vector<std::int64_t> constants;

  IneqSystem() = default;
  explicit IneqSystem(int vars) : vars(vars) {}

  void add_ge(std::vector<std::int64_t> c, std::int64_t rhs);  // c.x >= rhs
  void add_le(std::vector<std::int64_t> c, std::int64_t rhs);  // c.x <= rhs
  void add_eq(std::vector<std::int64_t> c, std::int64_t rhs);  // c.x == rhs
};

struct Feasibility {
  bool feasible = false;
  std::vector<std::int64_t> witness;  // populated exactly when feasible
};

// Exact integer feasibility: Fourier-Motzkin elimination with gcd tightening
// decides emptiness; bounded systems are settled by back-substitution search.
// Unbounded systems are probed on growing boxes and, failing that, reported
// by throwing (never by guessing).
Feasibility integer_feasibility(const IneqSystem& sys);

// Whether the rational solution set is bounded (true for empty systems).
bool rational_bounded(const IneqSystem& sys);

// Exact number of integer solutions; requires a bounded system.
BigInt lattice_point_count(const IneqSystem& sys);

// Enumerates all integer solutions of a bounded system.
void lattice_points(
    const IneqSystem& sys,
    const std::function<void(const std::vector<std::int64_t>&)>& fn);

}  // namespace toric
