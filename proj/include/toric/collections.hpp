#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "toric/batyrev.hpp"
#include "toric/bigint.hpp"
#include "toric/picard.hpp"

namespace toric {

/// Which index range the second half of the collection uses: the equation
/// form runs s = 1..r, the theorem form runs s = 0..r-1.  Both have r(n-r)
/// elements.
enum class Col2Mode { Eq6, Thm };

struct ColElement {
  bool prime = false;  // false: L_{s,q}, true: L'_{s,q}
  std::int64_t s = 0, q = 0;
  std::array<std::int64_t, 3> cls{};  // class in (t, y, v) coordinates
};

/// Ordered collection: s descending, within each s the elements interleave
/// L_{s,0}, L'_{s,0}, L_{s,1}, ..., L'_{s,n-r-1}, L_{s,n-r}.
struct OrderedCollection {
  std::vector<ColElement> elements;
};

OrderedCollection build_col(const FamilyParams& params,
                            Col2Mode mode = Col2Mode::Eq6);

/// The three closed-form difference families and their union.
struct DiffSet {
  std::vector<std::array<std::int64_t, 3>> diff1, diff2, diff3;
  std::vector<std::array<std::int64_t, 3>> all;  // sorted union
  // union == { A - B : A, B in Col } for the collection built with `mode`
  bool matches_pairwise = false;
};

DiffSet build_diff(const FamilyParams& params, Col2Mode mode = Col2Mode::Eq6);

struct PairFailure {
  std::size_t j = 0, k = 0;  // positions in the ordered collection, j <= k
  std::string reason;
};

struct ExceptionalReport {
  bool pass = false;
  bool structure_sheaf_ok = false;  // O acyclic with h^0 = 1
  std::size_t pairs_checked = 0;
  std::vector<PairFailure> failures;
};

/// Strong exceptionality for line bundles: every forward difference
/// F_k - F_j (j <= k) is acyclic, every backward difference F_j - F_k
/// (j < k) is acyclic with h^0 = 0, and O itself is exceptional.
ExceptionalReport verify_strongly_exceptional(const FamilyContext& ctx,
                                              const OrderedCollection& coll);

/// Same on an arbitrary fan, with the collection given by class coordinates.
ExceptionalReport verify_strongly_exceptional(
    const Fan& fan, const ClassGroup& cls,
    const std::vector<std::vector<std::int64_t>>& classes);

struct KoszulReport {
  std::int64_t window = 0;
  std::int64_t window_size = 0;     // (2w+1)^3
  std::int64_t start_size = 0;      // collection classes inside the window
  std::int64_t outside_window = 0;  // collection classes outside it
  std::int64_t covered = 0;
  bool all_covered = false;
  bool rules_exercised = false;  // some rule instance fits in the window
  std::int64_t iterations = 0;
  std::int64_t additions = 0;
  std::vector<std::array<std::int64_t, 3>> uncovered;  // sample, capped
};

/// Closure of the collection's classes under the five Koszul generation
/// rules (each exact sequence produces any single missing term from the
/// rest), restricted to the box |t|,|y|,|v| <= window.  Reports whether the
/// closure reaches every class in the box.
KoszulReport koszul_generation_check(const FamilyParams& params,
                                     const OrderedCollection& coll,
                                     std::int64_t window);

/// One sampled pair from the exclusion construction, with its certificates.
/// Class coordinates are in the (z, y, u) ray-class basis.
struct WitnessSample {
  std::array<std::int64_t, 3> p_plus{}, p_minus{}, diff{};
  std::array<std::int64_t, 5> alpha{};  // group sums (v, y, z, t, u)
  bool distinct = false;
  bool in_s = false;       // both pair members lie in the box S
  bool diff_in_r = false;  // difference lies in the box R
  bool non_acyclic = false;  // sign-pattern engine confirms non-acyclicity
};

struct CounterexampleReport {
  std::int64_t k = 0;
  BigInt s_size;                 // (k+1)^3
  BigInt excluded_lower_bound;   // exact count of parity-constrained pairs
  BigInt paper_excluded_bound;   // floor(k^3 / 32)
  BigInt max_cones;              // enumerated from the primitive collections
  BigInt max_cones_formula;      // k^3 + 2k^2 + 2k
  bool max_cones_match = false;
  // 32(k+1)^3 - k^3 < 32(k^3 + 2k^2 + 2k), the k^3/32 estimate
  bool inequality_holds = false;
  // s_size - excluded_lower_bound < max_cones, the sharper exact count
  bool exact_inequality_holds = false;
  std::int64_t r_size = 0;
  bool all_pairs_valid = false;   // every pair distinct, in S, difference in R
  bool all_r_certified = false;   // closed-form sign vector works for all of R
  bool fan_validated = false;     // full fan validation ran (small k only)
  bool class_table_checked = false;  // table recomputed from the ray matrix
  std::vector<WitnessSample> samples;
};

/// Arithmetic of the rank-3 counterexample with group sizes (1, k, 1, k, k):
/// sizes of the class box S and the exclusion pair set, cone counts, and the
/// deciding inequality, with non-acyclicity certificates for the excluded
/// differences.
CounterexampleReport counterexample_report(std::int64_t k, int max_samples = 8);

struct BondalBoxReport {
  std::int64_t k = 0;
  // closed-form coefficient ranges of the push-forward image classes,
  // (z, y, u) basis
  std::array<std::int64_t, 2> z_range{}, y_range{}, u_range{};
  bool brute_computed = false;  // image actually enumerated (small k)
  bool stabilized = false;
  std::int64_t b_size = 0;
  bool b_in_s = false;
  std::vector<std::array<std::int64_t, 3>> violations;  // capped
};

/// Push-forward image box check on the counterexample fan: for small k the
/// image is enumerated and tested against the box S; the closed-form
/// coefficient ranges are reported for every k.
BondalBoxReport section5_bondal_box(std::int64_t k, int window = 4,
                                    std::int64_t max_m = 24);

struct FamilyBoxReport {
  std::int64_t n = 0, r = 0, b = 0, c = 0;
  bool cr_le_b = false;
  bool contained = false;  // collection inside the box S as-is
  bool contained_up_to_twist = false;  // after twisting by twist * D_v
  std::int64_t twist = 0;
};

/// Uniform-twist family box check: whether the collection (all z-twists
/// equal to c, c <= b) lies in the box
///   S = { -sD_t - sD_y + qD_v, -sD_t - (s-1)D_y + qD_v :
///         0 <= s <= r, -(n-r) - c - (b-c)s <= q <= (b-c)(1-s) },
/// directly and up to a twist by a multiple of D_v, alongside the
/// inequality c*r <= b.
FamilyBoxReport family_box_report(std::int64_t n, std::int64_t r,
                                  std::int64_t b, std::int64_t c,
                                  Col2Mode mode = Col2Mode::Eq6);

}  // namespace toric
