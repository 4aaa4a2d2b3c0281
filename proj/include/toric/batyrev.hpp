#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

/// Pentagon parameters: five groups of rays X0..X4 with |Xi| = p[i] >= 1,
/// twist coefficients c (one per z-ray past the first, all >= 0) and
/// b (one per t-ray, all >= 0). dim = sum(p) - 3.
struct PentagonParams {
  std::array<int, 5> p{};
  std::vector<std::int64_t> c;  // size p[2] - 1
  std::vector<std::int64_t> b;  // size p[3]

  int dim() const { return p[0] + p[1] + p[2] + p[3] + p[4] - 3; }
  int ray_count() const { return dim() + 3; }
};

/// One-parameter family: |X1| = |X3| = |X4| = 1, |X2| = r, |X0| = n - r,
/// a single b >= 0 and nonnegative twists c_2..c_r.
struct FamilyParams {
  int n = 0, r = 0;
  std::int64_t b = 0;
  std::vector<std::int64_t> c;  // size r - 1, entry i is c_{i+2}

  PentagonParams pentagon() const;
};

/// A built fan plus its group structure. groups[i] lists the ray indices of
/// Xi; prims are the five collections Xi union X{i+1} (indices mod 5).
struct BuiltFan {
  Fan fan;
  std::array<std::vector<int>, 5> groups;
  std::vector<std::vector<int>> prims;
};

/// Builds the pentagon fan with standard basis assigned in listing order
/// v_1..v_{p0}, y_2..y_{p1}, z_2..z_{p2}, t_1..t_{p3}, u_2..u_{p4}.
BuiltFan build_batyrev(const PentagonParams& params);

/// Builds the family fan in the coordinates v_i = e_i, z_i = e_{n-r+i},
/// t = -(e_{n-r+1}+...+e_n), y and u derived. Ray order:
/// v_1..v_{n-r}, y, z_1..z_r, t, u.
BuiltFan build_family(const FamilyParams& params);

/// Number of maximal cones of the family fan: 2rn - 2r^2 + n + 1.
std::int64_t family_max_cone_count(int n, int r);

}  // namespace toric
