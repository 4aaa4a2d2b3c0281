#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "toric/fan.hpp"
#include "toric/matrix.hpp"
#include "toric/picard.hpp"

namespace toric {

/// Coordinate frame of a smooth maximal cone: `a` has the cone's rays as
/// rows (a lattice basis), `b` = a^{-1}.
struct ConeFrame {
  std::vector<int> rays;
  MatI a;
  MatI b;
};

ConeFrame cone_frame(const Fan& fan, int cone_index);

/// Local trivializing characters of O(D): u[i] solves <u[i], v_rho> = -a_rho
/// for every ray rho of maximal cone i (so the local data automatically agree
/// on shared rays); each solve is re-verified.
std::vector<std::vector<std::int64_t>> cartier_data(const Fan& fan,
                                                    const Divisor& div);

/// Principal iff all local characters coincide.
bool is_principal(const Fan& fan, const Divisor& div);

/// Splitting of a push-forward into line bundles: class multiset (sorted,
/// with multiplicities summing to m^dim) plus the distinct divisor
/// representatives encountered.
struct SplitResult {
  std::map<std::vector<std::int64_t>, std::int64_t> classes;
  std::vector<Divisor> representatives;
  std::int64_t total = 0;
};

/// Degree-m Frobenius push-forward of O(D), per character chi in [0,m)^dim
/// with the global per-ray floor formula: summand coefficients
/// floor((a_rho + <chi, v_rho>) / m). `lift_shift`, when given, replaces each
/// canonical lift chi by chi + m * lift_shift; the class multiset is
/// invariant under that change.
SplitResult bondal_split(const Fan& fan, const ClassGroup& cls,
                         const Divisor& div, std::int64_t m,
                         const std::vector<std::int64_t>* lift_shift = nullptr);

/// The same multiset computed through per-cone Cartier data: characters are
/// enumerated in the frame of `anchor_cone`, and each summand coefficient
/// comes from exact division with remainder (remainders in [0, m)) of the
/// local data in every cone containing the ray, cross-checked to agree.
SplitResult thomsen_split(const Fan& fan, const ClassGroup& cls,
                          const Divisor& div, std::int64_t m,
                          int anchor_cone = 0);

/// Classes appearing in Frobenius splittings of the structure sheaf, with
/// stabilization detection: m grows until `window` consecutive degrees add
/// nothing new (or max_m is hit, leaving stabilized == false).
struct BondalImage {
  std::vector<std::vector<std::int64_t>> classes;  // sorted
  std::vector<Divisor> representatives;            // distinct divisors seen
  bool stabilized = false;
  std::int64_t stabilized_at = 0;  // last m that contributed a new class
  std::int64_t max_m = 0;          // largest m actually split
};

BondalImage bondal_image(const Fan& fan, const ClassGroup& cls, int window = 4,
                         std::int64_t max_m = 64);

/// Classes of every image representative perturbed by all of {-1,0,1}^R.
std::vector<std::vector<std::int64_t>> b_prime(const Fan& fan,
                                               const ClassGroup& cls,
                                               const BondalImage& image);

}  // namespace toric
