#pragma once

#include <cstdint>
#include <vector>

#include "toric/batyrev.hpp"
#include "toric/bigint.hpp"
#include "toric/fan.hpp"
#include "toric/homology.hpp"
#include "toric/picard.hpp"

namespace toric {

/// Forbidden-set data for a fan: the proper ray subsets I (the empty set
/// included) whose induced subcomplex of the prim complex has nonvanishing
/// reduced homology, with that homology, plus the full-set homology (which
/// governs h^0).
struct ForbiddenData {
  int ray_count = 0;
  int dim = 0;
  std::vector<std::uint32_t> sets;
  std::vector<HomologyResult> homology;  // parallel to sets
  HomologyResult full;                   // induced on the full ray set
};

/// Forbidden data from explicitly given primitive collections: the pentagon
/// closed form when they have the circular five-group shape, else brute
/// enumeration over all subsets.
ForbiddenData forbidden_data(const Fan& fan,
                             const std::vector<std::vector<int>>& prims);

/// Same, computing the primitive collections from the fan first.
ForbiddenData forbidden_data(const Fan& fan);

/// The forbidden sets only, as sorted bitmasks.
std::vector<std::uint32_t> forbidden_sets(const Fan& fan);

/// Does the class of `div` admit a representative r with r_i >= 0 exactly for
/// the rays i in `pattern` and r_i <= -1 for the rest? Decided by exact
/// integer feasibility in the lattice of linear-equivalence translates.
bool representation_exists(const Fan& fan, const Divisor& div,
                           std::uint32_t pattern);

/// Number of global sections: lattice points u with <u, v_i> + a_i >= 0 for
/// every ray. Errors if that region is unbounded.
BigInt h0(const Fan& fan, const Divisor& div);

/// True iff h^1 = ... = h^n = 0 for the line bundle of `div`.
bool is_acyclic(const Fan& fan, const ForbiddenData& data, const Divisor& div);
bool is_acyclic(const Fan& fan, const Divisor& div);

/// The table h^0..h^n. Every forbidden pattern with nonvanishing homology
/// must have a bounded representative region, and the contributing homology
/// must be torsion-free; errors otherwise.
std::vector<BigInt> cohomology_dims(const Fan& fan, const ForbiddenData& data,
                                    const Divisor& div);
std::vector<BigInt> cohomology_dims(const Fan& fan, const Divisor& div);

/// Acyclicity of a class on a pentagon fan decided by eleven grouped
/// sign-pattern integer programs (all-negative, the five prims nonnegative,
/// the five prim complements nonnegative), with one aggregated variable per
/// group whose rays share a class row and per-ray variables otherwise.
/// `table` holds the class of each ray divisor (one row per ray) in some
/// basis; `cls` is the queried class in the same basis. Exact for any size.
bool pentagon_class_acyclic(const BuiltFan& built,
                            const std::vector<std::vector<std::int64_t>>& table,
                            const std::vector<std::int64_t>& cls);

/// pentagon_class_acyclic on a family fan with a (t, y, v) class triple.
bool is_acyclic_family(const FamilyContext& ctx,
                       const std::vector<std::int64_t>& tyv_class);

/// Hom/Ext vanishing data for an ordered pair of line bundles given by
/// divisors L1, L2.
struct ExtReport {
  BigInt hom_forward = 0;       // h^0(L2 - L1) = dim Hom(L1, L2)
  bool higher_forward = false;  // all higher Ext(L1, L2) vanish
  BigInt hom_backward = 0;      // h^0(L1 - L2) = dim Hom(L2, L1)
};

ExtReport ext_vanishing(const Fan& fan, const ForbiddenData& data,
                        const Divisor& d1, const Divisor& d2);
ExtReport ext_vanishing(const Fan& fan, const Divisor& d1, const Divisor& d2);

}  // namespace toric
