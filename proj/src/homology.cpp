#include "toric/homology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "toric/common.hpp"
#include "toric/matrix.hpp"

namespace toric {

namespace {

constexpr int kMaxFaces = 20000;

int popcount(std::uint32_t m) { return std::popcount(m); }

/// Keep only minimal masks (no kept mask strictly contains another).
std::vector<std::uint32_t> minimalize(std::vector<std::uint32_t> masks) {
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<std::uint32_t> out;
  for (std::uint32_t m : masks) {
    bool dominated = false;
    for (std::uint32_t kept : out)
      if ((kept & ~m) == 0) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> mask_vertices(std::uint32_t m) {
  std::vector<int> v;
  for (int i = 0; i < 32; ++i)
    if (m & (1u << i)) v.push_back(i);
  return v;
}

bool contains_prim(const std::vector<std::uint32_t>& prims, std::uint32_t m) {
  for (std::uint32_t p : prims)
    if ((p & ~m) == 0) return true;
  return false;
}

/// First vertex lying in exactly one prim, paired with that prim's index;
/// {-1, -1} when none exists.
std::pair<int, int> find_delete_witness(const PrimComplex& c) {
  for (int x = 0; x < c.vertices; ++x) {
    int count = 0, which = -1;
    for (size_t p = 0; p < c.prims.size(); ++p)
      if (c.prims[p] & (1u << x)) {
        ++count;
        which = static_cast<int>(p);
      }
    if (count == 1) return {which, x};
  }
  return {-1, -1};
}

bool has_free_vertex(const PrimComplex& c) {
  std::uint32_t covered = 0;
  for (std::uint32_t p : c.prims) covered |= p;
  std::uint32_t all = c.vertices == 32 ? ~0u : ((1u << c.vertices) - 1);
  return (all & ~covered) != 0;
}

}  // namespace

PrimComplex make_complex(int vertices,
                         const std::vector<std::vector<int>>& prims) {
  if (vertices < 0 || vertices > 32)
    throw Error("complex: vertex count must be between 0 and 32");
  std::vector<std::uint32_t> masks;
  for (const auto& p : prims) {
    if (p.empty()) throw Error("complex: empty prim (void complex)");
    std::uint32_t m = 0;
    for (int v : p) {
      if (v < 0 || v >= vertices)
        throw Error("complex: prim vertex out of range");
      m |= 1u << v;
    }
    masks.push_back(m);
  }
  PrimComplex c;
  c.vertices = vertices;
  c.prims = minimalize(std::move(masks));
  return c;
}

PrimComplex induced_complex(int vertex_count,
                            const std::vector<std::uint32_t>& prim_masks,
                            std::uint32_t subset) {
  std::vector<int> idx(static_cast<size_t>(std::max(vertex_count, 1)), -1);
  int k = 0;
  for (int i = 0; i < vertex_count; ++i)
    if (subset & (1u << i)) idx[static_cast<size_t>(i)] = k++;
  PrimComplex c;
  c.vertices = k;
  for (std::uint32_t p : prim_masks) {
    if ((p & ~subset) != 0) continue;
    std::uint32_t m = 0;
    for (int v : mask_vertices(p)) m |= 1u << idx[static_cast<size_t>(v)];
    c.prims.push_back(m);
  }
  c.prims = minimalize(std::move(c.prims));
  return c;
}

HomologyResult snf_homology(const PrimComplex& c) {
  const int V = c.vertices;
  if (V > homology_vertex_bound())
    throw Error("snf_homology: vertex count " + std::to_string(V) +
                " exceeds bound " + std::to_string(homology_vertex_bound()));
  // Faces grouped by cardinality, each level in increasing mask order; a
  // size-k face has geometric degree k-1.
  std::vector<std::vector<std::uint32_t>> faces(static_cast<size_t>(V) + 1);
  const std::uint64_t total = 1ull << V;
  std::uint64_t face_count = 0;
  for (std::uint64_t mm = 0; mm < total; ++mm) {
    auto m = static_cast<std::uint32_t>(mm);
    if (contains_prim(c.prims, m)) continue;
    if (++face_count > kMaxFaces)
      throw Error("snf_homology: face count exceeds bound");
    faces[static_cast<size_t>(popcount(m))].push_back(m);
  }
  // Boundary map D_k : Z^{faces[k]} -> Z^{faces[k-1]}; rank and invariant
  // factors via Smith normal form. D_0 and D_{V+1} are zero.
  std::vector<int> d_rank(static_cast<size_t>(V) + 2, 0);
  std::vector<std::vector<std::int64_t>> d_tors(static_cast<size_t>(V) + 2);
  for (int k = 1; k <= V; ++k) {
    const auto& hi = faces[static_cast<size_t>(k)];
    const auto& lo = faces[static_cast<size_t>(k - 1)];
    if (hi.empty() || lo.empty()) continue;
    MatI b(static_cast<int>(lo.size()), static_cast<int>(hi.size()));
    for (size_t col = 0; col < hi.size(); ++col) {
      std::uint32_t m = hi[col];
      int pos = 0;
      for (int v = 0; v < V; ++v) {
        if (!(m & (1u << v))) continue;
        std::uint32_t child = m & ~(1u << v);
        auto it = std::lower_bound(lo.begin(), lo.end(), child);
        // Subsets of faces are faces, so the child must be present.
        if (it == lo.end() || *it != child)
          throw Error("snf_homology: internal face enumeration error");
        int row = static_cast<int>(it - lo.begin());
        b(row, static_cast<int>(col)) = (pos % 2 == 0) ? 1 : -1;
        ++pos;
      }
    }
    SmithResult s = smith_normal_form(b);
    d_rank[static_cast<size_t>(k)] = s.rank;
    for (const BigInt& d : s.divisors) {
      BigInt a = d < 0 ? BigInt(-d) : d;
      if (a != 1) d_tors[static_cast<size_t>(k)].push_back(to_int64(a));
    }
  }
  HomologyResult h;
  h.vertices = V;
  h.ranks.assign(static_cast<size_t>(V) + 1, 0);
  h.torsion.assign(static_cast<size_t>(V) + 1, {});
  for (int k = 0; k <= V; ++k) {
    int cycles = static_cast<int>(faces[static_cast<size_t>(k)].size()) -
                 d_rank[static_cast<size_t>(k)];
    h.ranks[static_cast<size_t>(k)] =
        cycles - d_rank[static_cast<size_t>(k + 1)];
    h.torsion[static_cast<size_t>(k)] = d_tors[static_cast<size_t>(k + 1)];
  }
  return h;
}

ReductionStep reduce_glue(const PrimComplex& c) {
  // Signature of a vertex = the set of prims containing it. Vertices with
  // equal signatures merge; class ids follow first appearance.
  std::map<std::vector<char>, int> classes;
  std::vector<int> cls(static_cast<size_t>(std::max(c.vertices, 1)), -1);
  for (int v = 0; v < c.vertices; ++v) {
    std::vector<char> sig(c.prims.size(), 0);
    for (size_t p = 0; p < c.prims.size(); ++p)
      if (c.prims[p] & (1u << v)) sig[p] = 1;
    auto [it, fresh] =
        classes.emplace(std::move(sig), static_cast<int>(classes.size()));
    (void)fresh;
    cls[static_cast<size_t>(v)] = it->second;
  }
  const int k = static_cast<int>(classes.size());
  ReductionStep step;
  step.shift = c.vertices - k;
  step.complex.vertices = k;
  for (std::uint32_t p : c.prims) {
    std::uint32_t image = 0;
    for (int v : mask_vertices(p)) image |= 1u << cls[static_cast<size_t>(v)];
    // Every prim is a union of signature classes; verify.
    std::uint32_t back = 0;
    for (int v = 0; v < c.vertices; ++v)
      if (image & (1u << cls[static_cast<size_t>(v)])) back |= 1u << v;
    if (back != p) throw Error("reduce_glue: prim is not a union of classes");
    step.complex.prims.push_back(image);
  }
  step.complex.prims = minimalize(std::move(step.complex.prims));
  if (step.complex.prims.size() != c.prims.size())
    throw Error("reduce_glue: prim images collide");
  return step;
}

ReductionStep reduce_delete(const PrimComplex& c, int prim_index, int x) {
  if (prim_index < 0 || prim_index >= static_cast<int>(c.prims.size()))
    throw Error("reduce_delete: prim index out of range");
  if (x < 0 || x >= c.vertices)
    throw Error("reduce_delete: vertex out of range");
  int membership = 0;
  for (std::uint32_t p : c.prims)
    if (p & (1u << x)) ++membership;
  if (membership != 1)
    throw Error("reduce_delete: vertex lies in " + std::to_string(membership) +
                " prims; need exactly one");
  const std::uint32_t P = c.prims[static_cast<size_t>(prim_index)];
  if (!(P & (1u << x)))
    throw Error("reduce_delete: vertex not in the named prim");

  std::vector<int> idx(static_cast<size_t>(c.vertices), -1);
  int k = 0;
  for (int v = 0; v < c.vertices; ++v)
    if (!(P & (1u << v))) idx[static_cast<size_t>(v)] = k++;
  ReductionStep step;
  step.shift = popcount(P) - 1;
  step.complex.vertices = k;
  for (size_t p = 0; p < c.prims.size(); ++p) {
    if (static_cast<int>(p) == prim_index) continue;
    std::uint32_t cut = 0;
    for (int v : mask_vertices(c.prims[p] & ~P))
      cut |= 1u << idx[static_cast<size_t>(v)];
    if (cut == 0) throw Error("reduce_delete: prims are not an antichain");
    step.complex.prims.push_back(cut);
  }
  step.complex.prims = minimalize(std::move(step.complex.prims));
  return step;
}

HomologyResult reduced_homology(const PrimComplex& c) {
  PrimComplex cur = c;
  int shift = 0;
  HomologyResult h;
  h.vertices = c.vertices;
  h.ranks.assign(static_cast<size_t>(c.vertices) + 1, 0);
  h.torsion.assign(static_cast<size_t>(c.vertices) + 1, {});

  for (;;) {
    if (cur.prims.empty()) {
      if (cur.vertices == 0) {
        // The complex {∅}: one reduced homology class in degree -1.
        h.ranks.at(static_cast<size_t>(shift)) = 1;
      }
      // Otherwise a full simplex: contractible, everything vanishes.
      return h;
    }
    if (has_free_vertex(cur)) {
      // A vertex lying in no prim is a cone apex: contractible.
      return h;
    }
    ReductionStep glue = reduce_glue(cur);
    if (glue.complex.vertices < cur.vertices) {
      cur = std::move(glue.complex);
      shift += glue.shift;
      continue;
    }
    auto [prim, x] = find_delete_witness(cur);
    if (prim >= 0) {
      ReductionStep del = reduce_delete(cur, prim, x);
      cur = std::move(del.complex);
      shift += del.shift;
      continue;
    }
    break;
  }

  HomologyResult base = snf_homology(cur);
  for (int d = -1; d < h.vertices; ++d) {
    int bd = d - shift;
    h.ranks[static_cast<size_t>(d + 1)] = base.rank(bd);
    if (bd + 1 >= 0 && bd + 1 < static_cast<int>(base.torsion.size()))
      h.torsion[static_cast<size_t>(d + 1)] =
          base.torsion[static_cast<size_t>(bd + 1)];
  }
  return h;
}

bool is_acyclic_complex(const PrimComplex& c) {
  return reduced_homology(c).acyclic();
}

std::vector<std::uint32_t> non_acyclic_subsets(
    int vertex_count, const std::vector<std::vector<int>>& prims) {
  if (vertex_count < 0 || vertex_count > 24)
    throw Error("non_acyclic_subsets: vertex count exceeds enumeration bound");
  PrimComplex all = make_complex(vertex_count, prims);
  const std::uint32_t full =
      vertex_count == 32 ? ~0u : ((1u << vertex_count) - 1);
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < full; ++s) {
    PrimComplex sub = induced_complex(vertex_count, all.prims, s);
    if (!is_acyclic_complex(sub)) out.push_back(s);
  }
  return out;
}

std::optional<std::array<std::vector<int>, 5>> detect_pentagon(
    int vertex_count, const std::vector<std::vector<int>>& prims) {
  if (prims.size() != 5 || vertex_count < 5 || vertex_count > 32)
    return std::nullopt;
  PrimComplex c;
  try {
    c = make_complex(vertex_count, prims);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (c.prims.size() != 5) return std::nullopt;
  // Each vertex must lie in exactly two prims, and the shared-vertex graph on
  // the five prims must be a single 5-cycle.
  std::vector<std::pair<int, int>> sig(static_cast<size_t>(vertex_count),
                                       {-1, -1});
  for (int v = 0; v < vertex_count; ++v) {
    std::vector<int> in;
    for (size_t p = 0; p < 5; ++p)
      if (c.prims[p] & (1u << v)) in.push_back(static_cast<int>(p));
    if (in.size() != 2) return std::nullopt;
    sig[static_cast<size_t>(v)] = {in[0], in[1]};
  }
  bool adj[5][5] = {};
  for (const auto& [a, b] : sig)
    adj[a][b] = adj[b][a] = true;
  int deg[5] = {};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (i != j && adj[i][j]) ++deg[i];
  for (int i = 0; i < 5; ++i)
    if (deg[i] != 2) return std::nullopt;
  // Walk the cycle starting at prim 0.
  int order[5] = {0, -1, -1, -1, -1};
  int prev = -1, at = 0;
  for (int step = 1; step < 5; ++step) {
    int nxt = -1;
    for (int j = 0; j < 5; ++j)
      if (j != at && j != prev && adj[at][j]) {
        nxt = j;
        break;
      }
    if (nxt < 0) return std::nullopt;
    order[step] = nxt;
    prev = at;
    at = nxt;
  }
  if (!adj[order[4]][order[0]]) return std::nullopt;
  // Group X_i = vertices shared by prims order[i-1] and order[i].
  std::array<std::vector<int>, 5> groups;
  for (int v = 0; v < vertex_count; ++v) {
    auto [a, b] = sig[static_cast<size_t>(v)];
    bool placed = false;
    for (int i = 0; i < 5 && !placed; ++i) {
      int pa = order[(i + 4) % 5];
      int pb = order[i];
      if ((a == pa && b == pb) || (a == pb && b == pa)) {
        groups[static_cast<size_t>(i)].push_back(v);
        placed = true;
      }
    }
    if (!placed) return std::nullopt;
  }
  for (int i = 0; i < 5; ++i) {
    if (groups[static_cast<size_t>(i)].empty()) return std::nullopt;
    // Prim order[i] must equal X_i ∪ X_{i+1}.
    std::uint32_t expect = 0;
    for (int v : groups[static_cast<size_t>(i)]) expect |= 1u << v;
    for (int v : groups[static_cast<size_t>((i + 1) % 5)]) expect |= 1u << v;
    if (expect != c.prims[static_cast<size_t>(order[i])]) return std::nullopt;
  }
  return groups;
}

std::vector<std::uint32_t> pentagon_non_acyclic_sets(
    int vertex_count, const std::array<std::vector<int>, 5>& groups) {
  if (vertex_count < 5 || vertex_count > 32)
    throw Error("pentagon_non_acyclic_sets: bad vertex count");
  std::array<std::uint32_t, 5> gm{};
  std::uint32_t all = 0;
  int covered = 0;
  for (int i = 0; i < 5; ++i) {
    if (groups[static_cast<size_t>(i)].empty())
      throw Error("pentagon_non_acyclic_sets: empty group");
    for (int v : groups[static_cast<size_t>(i)]) {
      if (v < 0 || v >= vertex_count)
        throw Error("pentagon_non_acyclic_sets: vertex out of range");
      if (all & (1u << v))
        throw Error("pentagon_non_acyclic_sets: groups overlap");
      gm[static_cast<size_t>(i)] |= 1u << v;
      all |= 1u << v;
      ++covered;
    }
  }
  if (covered != vertex_count)
    throw Error("pentagon_non_acyclic_sets: groups must cover all vertices");
  std::vector<std::vector<int>> prims;
  for (int i = 0; i < 5; ++i) {
    std::vector<int> p = groups[static_cast<size_t>(i)];
    const auto& q = groups[static_cast<size_t>((i + 1) % 5)];
    p.insert(p.end(), q.begin(), q.end());
    std::sort(p.begin(), p.end());
    prims.push_back(std::move(p));
  }
  PrimComplex c = make_complex(vertex_count, prims);
  std::vector<std::uint32_t> out{0u};
  for (int i = 0; i < 5; ++i)
    out.push_back(gm[static_cast<size_t>(i)] |
                  gm[static_cast<size_t>((i + 1) % 5)]);
  for (int i = 0; i < 5; ++i)
    out.push_back(all & ~(gm[static_cast<size_t>(i)] |
                          gm[static_cast<size_t>((i + 1) % 5)]));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() != 11)
    throw Error("pentagon_non_acyclic_sets: expected 11 distinct sets");
  for (std::uint32_t s : out)
    if (is_acyclic_complex(induced_complex(vertex_count, c.prims, s)))
      throw Error("pentagon_non_acyclic_sets: closed-form set is acyclic");
  return out;
}

}  // namespace toric
