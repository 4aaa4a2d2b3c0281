#pragma once

#include <cstdint>
#include <vector>

#include "toric/batyrev.hpp"
#include "toric/fan.hpp"
#include "toric/matrix.hpp"

namespace toric {

// Divisor class group Cl(X) = Z^R / { (<u, ray_i>)_i : u in Z^n } for fans
// whose rays span the lattice with trivial invariant factors (always the
// case for smooth complete fans).  Class coordinates live in a basis derived
// from the Smith normal form of the ray matrix.
struct ClassGroup {
  int ray_count = 0;
  int rank = 0;     // R - n
  MatI projection;  // rank x R: divisor coefficient vector -> class
  MatI section;     // R x rank: class -> representative divisor

  std::vector<std::int64_t> classify(const Divisor& d) const;
  Divisor divisor_from_class(const std::vector<std::int64_t>& cls) const;
};

ClassGroup class_group(const Fan& fan);

// Row i is the class of the i-th ray divisor expressed in the basis given by
// the classes of `basis_rays`; requires those classes to form a Z-basis.
std::vector<std::vector<std::int64_t>> ray_class_table(
    const Fan& fan, const std::vector<int>& basis_rays);

// Rank-3 family fan together with ray divisor classes in the basis
// (D_t, D_y, D_{v_1}).  The closed-form table
//   D_{v_i} = (0,0,1), D_y = (0,1,0), D_t = (1,0,0), D_u = (0,-1,1),
//   D_{z_1} = (1,1,b), D_{z_i} = (1,1,b-c_i) for i >= 2
// is cross-checked against the generic class-group computation on build.
struct FamilyContext {
  FamilyParams params;
  BuiltFan built;
  ClassGroup cls;
  std::vector<std::vector<std::int64_t>> tyv;  // (n+3) x 3

  std::vector<std::int64_t> classify_tyv(const Divisor& d) const;
  Divisor divisor_from_tyv(const std::vector<std::int64_t>& c) const;
};

FamilyContext make_family_context(const FamilyParams& params);

}  // namespace toric
