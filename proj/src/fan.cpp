#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "toric/matrix.hpp"

namespace toric {

namespace {

bool next_combination(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

FanCheck validate_fan(const Fan& fan) {
  FanCheck chk;
  const int n = fan.dim;
  const int R = static_cast<int>(fan.rays.size());
  if (n < 1) chk.errors.push_back("dim must be at least 1");
  if (fan.rays.empty()) chk.errors.push_back("no rays");
  if (fan.max_cones.empty()) chk.errors.push_back("no maximal cones");
  for (int j = 0; j < R; ++j) {
    const Ray& r = fan.rays[j];
    if (static_cast<int>(r.size()) != n) {
      chk.errors.push_back("ray " + std::to_string(j) + ": dimension mismatch");
      continue;
    }
    std::int64_t g = 0;
    for (auto x : r) g = std::gcd(g, x < 0 ? -x : x);
    if (g != 1)
      chk.errors.push_back("ray " + std::to_string(j) + ": not primitive");
    for (int i = 0; i < j; ++i)
      if (fan.rays[i] == r)
        chk.errors.push_back("ray " + std::to_string(j) + ": duplicate of ray " +
                             std::to_string(i));
  }
  std::vector<bool> used(R, false);
  for (size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& cone = fan.max_cones[c];
    if (static_cast<int>(cone.size()) != n) {
      chk.errors.push_back("cone " + std::to_string(c) + ": size != dim");
      continue;
    }
    bool bad = false;
    for (int idx : cone)
      if (idx < 0 || idx >= R) {
        chk.errors.push_back("cone " + std::to_string(c) + ": ray index out of range");
        bad = true;
      }
    if (bad) continue;
    auto sorted = cone;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      chk.errors.push_back("cone " + std::to_string(c) + ": repeated ray index");
    for (int idx : cone) used[idx] = true;
  }
  for (int j = 0; j < R; ++j)
    if (!used[j] && chk.errors.empty())
      chk.errors.push_back("ray " + std::to_string(j) + ": not in any maximal cone");
  if (!chk.errors.empty()) return chk;

  // Smoothness: each maximal cone's generators form a lattice basis.
  chk.smooth = true;
  for (const auto& cone : fan.max_cones) {
    MatI m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = fan.rays[cone[i]][j];
    BigInt d = determinant(m);
    if (d != 1 && d != -1) {
      chk.smooth = false;
      break;
    }
  }

  // Pseudo-manifold proxy: every facet in exactly two maximal cones, and the
  // facet-adjacency graph connected.
  std::map<std::vector<int>, std::vector<int>> facets;
  for (size_t c = 0; c < fan.max_cones.size(); ++c) {
    auto cone = fan.max_cones[c];
    std::sort(cone.begin(), cone.end());
    for (int drop = 0; drop < n; ++drop) {
      std::vector<int> f;
      f.reserve(n - 1);
      for (int i = 0; i < n; ++i)
        if (i != drop) f.push_back(cone[i]);
      facets[f].push_back(static_cast<int>(c));
    }
  }
  bool twice = true;
  std::vector<int> parent(fan.max_cones.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [f, cs] : facets) {
    if (cs.size() != 2) {
      twice = false;
      break;
    }
    parent[find_root(parent, cs[0])] = find_root(parent, cs[1]);
  }
  bool connected = true;
  if (twice)
    for (size_t c = 1; c < fan.max_cones.size(); ++c)
      if (find_root(parent, static_cast<int>(c)) != find_root(parent, 0)) {
        connected = false;
        break;
      }
  chk.pseudo_manifold = twice && connected;
  return chk;
}

void require_valid(const Fan& fan) {
  FanCheck chk = validate_fan(fan);
  if (!chk.ok()) {
    std::string msg = "invalid fan:";
    if (!chk.smooth) msg += " not smooth;";
    if (!chk.pseudo_manifold) msg += " not a pseudo-manifold;";
    for (const auto& e : chk.errors) msg += " " + e + ";";
    throw Error(msg);
  }
}

std::vector<std::vector<int>> primitive_collections(const Fan& fan) {
  const int R = static_cast<int>(fan.rays.size());
  if (R > max_rays_bound())
    throw Error("primitive_collections: ray count exceeds enumeration bound");
  std::vector<std::uint32_t> cone_masks;
  cone_masks.reserve(fan.max_cones.size());
  for (const auto& cone : fan.max_cones) {
    std::uint32_t m = 0;
    for (int idx : cone) m |= 1u << idx;
    cone_masks.push_back(m);
  }
  const std::uint32_t full = R == 32 ? ~0u : ((1u << R) - 1);
  std::vector<char> is_face(static_cast<size_t>(full) + 1, 0);
  for (std::uint32_t cm : cone_masks) {
    // all submasks of cm
    std::uint32_t s = cm;
    for (;;) {
      is_face[s] = 1;
      if (s == 0) break;
      s = (s - 1) & cm;
    }
  }
  std::vector<std::vector<int>> prims;
  for (std::uint32_t m = 1; m <= full; ++m) {
    if (is_face[m]) continue;
    bool minimal = true;
    for (std::uint32_t b = m; b && minimal; b &= b - 1)
      if (!is_face[m & ~(b & -b)]) minimal = false;
    if (!minimal) continue;
    std::vector<int> p;
    for (int i = 0; i < R; ++i)
      if (m & (1u << i)) p.push_back(i);
    prims.push_back(std::move(p));
  }
  std::sort(prims.begin(), prims.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return prims;
}

std::vector<std::vector<int>> maximal_cones_from_primitives(
    int ray_count, int dim, const std::vector<std::vector<int>>& prims) {
  if (dim < 1 || dim > ray_count)
    throw Error("maximal_cones_from_primitives: bad dimensions");
  for (const auto& p : prims)
    for (int idx : p)
      if (idx < 0 || idx >= ray_count)
        throw Error("maximal_cones_from_primitives: prim index out of range");
  std::vector<std::vector<int>> cones;
  const int co = ray_count - dim;
  if (co <= dim) {
    // Enumerate complements: a size-dim set spans a cone iff its complement
    // meets every primitive collection.
    std::vector<std::vector<char>> in_prim(prims.size(),
                                           std::vector<char>(ray_count, 0));
    for (size_t p = 0; p < prims.size(); ++p)
      for (int idx : prims[p]) in_prim[p][idx] = 1;
    std::vector<int> t(co);
    std::iota(t.begin(), t.end(), 0);
    if (co == 0) {
      bool any_prim = !prims.empty();
      if (!any_prim) {
        std::vector<int> all(ray_count);
        std::iota(all.begin(), all.end(), 0);
        cones.push_back(all);
      }
      return cones;
    }
    std::vector<std::vector<int>> complements;
    do {
      bool hits_all = true;
      for (size_t p = 0; p < prims.size() && hits_all; ++p) {
        bool hit = false;
        for (int idx : t)
          if (in_prim[p][idx]) {
            hit = true;
            break;
          }
        hits_all = hit;
      }
      if (hits_all) complements.push_back(t);
    } while (next_combination(t, ray_count));
    std::vector<char> removed(ray_count, 0);
    for (const auto& comp : complements) {
      std::fill(removed.begin(), removed.end(), 0);
      for (int idx : comp) removed[idx] = 1;
      std::vector<int> cone;
      cone.reserve(dim);
      for (int i = 0; i < ray_count; ++i)
        if (!removed[i]) cone.push_back(i);
      cones.push_back(std::move(cone));
    }
    std::sort(cones.begin(), cones.end());
    return cones;
  }
  std::vector<int> s(dim);
  std::iota(s.begin(), s.end(), 0);
  std::vector<char> member(ray_count, 0);
  do {
    std::fill(member.begin(), member.end(), 0);
    for (int idx : s) member[idx] = 1;
    bool face = true;
    for (const auto& p : prims) {
      bool contained = true;
      for (int idx : p)
        if (!member[idx]) {
          contained = false;
          break;
        }
      if (contained) {
        face = false;
        break;
      }
    }
    if (face) cones.push_back(s);
  } while (next_combination(s, ray_count));
  return cones;
}

}  // namespace toric
