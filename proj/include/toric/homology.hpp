#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace toric {

/// Abstract simplicial complex on vertex set {0, ..., vertices-1}, presented
/// by its minimal non-faces ("prims", stored as bitmasks): the faces are
/// exactly the subsets containing no prim. The empty set is always a face.
/// Invariant: prims are nonempty, pairwise incomparable, sorted.
struct PrimComplex {
  int vertices = 0;
  std::vector<std::uint32_t> prims;
};

/// Build a complex from explicit non-face vertex lists; validates indices,
/// deduplicates, and keeps only the minimal non-faces.
PrimComplex make_complex(int vertices,
                         const std::vector<std::vector<int>>& prims);

/// Full subcomplex induced on `subset`: the faces contained in the subset,
/// with surviving vertices re-indexed in increasing order.
PrimComplex induced_complex(int vertex_count,
                            const std::vector<std::uint32_t>& prim_masks,
                            std::uint32_t subset);

/// Reduced integral homology. ranks[d+1] is the rank of the reduced homology
/// in degree d for d = -1, ..., vertices-1; torsion[d+1] lists the nontrivial
/// invariant factors (torsion coefficients) in degree d.
struct HomologyResult {
  int vertices = 0;
  std::vector<int> ranks;
  std::vector<std::vector<std::int64_t>> torsion;

  int rank(int degree) const {
    int i = degree + 1;
    if (i < 0 || i >= static_cast<int>(ranks.size())) return 0;
    return ranks[static_cast<size_t>(i)];
  }
  bool acyclic() const {
    for (int r : ranks)
      if (r != 0) return false;
    return !has_torsion();
  }
  bool has_torsion() const {
    for (const auto& t : torsion)
      if (!t.empty()) return true;
    return false;
  }
};

/// Homology straight from Smith normal forms of the boundary matrices.
/// Requires vertices <= homology_vertex_bound() and a modest face count.
HomologyResult snf_homology(const PrimComplex& c);

/// One reduction step: the smaller complex plus the degree shift, meaning
/// reduced H_d(input) == reduced H_{d-shift}(output) for every d.
struct ReductionStep {
  PrimComplex complex;
  int shift = 0;
};

/// Merge vertices that lie in exactly the same set of prims. Every prim is a
/// union of such classes, so the prims descend. shift = vertices - classes.
ReductionStep reduce_glue(const PrimComplex& c);

/// Remove all vertices of prim `prim_index`, justified by a witness vertex x
/// lying in that prim and in no other. The remaining prims are intersected
/// with the surviving vertex set. shift = |prim| - 1.
/// Errors when x is outside the named prim or lies in zero or >= 2 prims.
ReductionStep reduce_delete(const PrimComplex& c, int prim_index, int x);

/// Homology via glue/delete reductions, falling back to snf_homology on the
/// irreducible core. Handles complexes far above the direct vertex bound
/// whenever the reductions shrink them enough.
HomologyResult reduced_homology(const PrimComplex& c);

/// True iff every reduced homology group vanishes (ranks and torsion).
bool is_acyclic_complex(const PrimComplex& c);

/// All proper subsets I of {0..vertex_count-1} (the empty set included) whose
/// induced subcomplex has nonvanishing reduced homology, as sorted bitmasks.
/// Brute force over all 2^vertex_count subsets.
std::vector<std::uint32_t> non_acyclic_subsets(
    int vertex_count, const std::vector<std::vector<int>>& prims);

/// Recognize the circular two-overlap structure of exactly five prims
/// covering every vertex: a partition X_0..X_4 with prims X_i ∪ X_{i+1}
/// (indices mod 5). Returns the groups in circular order, or nullopt.
std::optional<std::array<std::vector<int>, 5>> detect_pentagon(
    int vertex_count, const std::vector<std::vector<int>>& prims);

/// Closed form for non_acyclic_subsets when the prims form a pentagon: the
/// empty set, the five prims, and the five prim complements (always 11
/// distinct sets). Every returned set is re-verified non-acyclic; throws if
/// that verification fails.
std::vector<std::uint32_t> pentagon_non_acyclic_sets(
    int vertex_count, const std::array<std::vector<int>, 5>& groups);

}  // namespace toric
