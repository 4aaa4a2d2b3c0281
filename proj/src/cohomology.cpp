#include "toric/cohomology.hpp"

#include <algorithm>
#include <string>

#include "toric/common.hpp"
#include "toric/feasibility.hpp"

namespace toric {

namespace {

/// Feasibility system for representatives of [div] whose coefficients are
/// nonnegative exactly on `pattern`: variables are the lattice character u,
/// the representative being div + div(u).
IneqSystem support_system(const Fan& fan, const Divisor& div,
                          std::uint32_t pattern) {
  const int n = fan.dim;
  const int R = static_cast<int>(fan.rays.size());
  if (static_cast<int>(div.size()) != R)
    throw Error("divisor length does not match ray count");
  IneqSystem sys(n);
  for (int i = 0; i < R; ++i) {
    std::vector<std::int64_t> row(fan.rays[static_cast<size_t>(i)].begin(),
                                  fan.rays[static_cast<size_t>(i)].end());
    if (pattern & (1u << i)) {
      sys.add_ge(std::move(row), -div[static_cast<size_t>(i)]);
    } else {
      sys.add_le(std::move(row), -div[static_cast<size_t>(i)] - 1);
    }
  }
  return sys;
}

/// Degrees -1..dim-2 of the induced complex contribute to h^1..h^n. Torsion
/// there makes dimensions field-dependent, which we refuse to output.
bool contributes_above_h0(const HomologyResult& hom, int dim) {
  for (int d = -1; d <= dim - 2; ++d) {
    if (hom.rank(d) != 0) return true;
    int i = d + 1;
    if (i < static_cast<int>(hom.torsion.size()) &&
        !hom.torsion[static_cast<size_t>(i)].empty())
      throw Error(
          "forbidden complex has torsion; dimensions are field-dependent");
  }
  return false;
}

}  // namespace

ForbiddenData forbidden_data(const Fan& fan,
                             const std::vector<std::vector<int>>& prims) {
  const int R = static_cast<int>(fan.rays.size());
  ForbiddenData data;
  data.ray_count = R;
  data.dim = fan.dim;
  auto pent = detect_pentagon(R, prims);
  if (pent) {
    data.sets = pentagon_non_acyclic_sets(R, *pent);
  } else {
    data.sets = non_acyclic_subsets(R, prims);
  }
  PrimComplex all = make_complex(R, prims);
  for (std::uint32_t s : data.sets)
    data.homology.push_back(reduced_homology(induced_complex(R, all.prims, s)));
  const std::uint32_t full = R == 32 ? ~0u : ((1u << R) - 1);
  data.full = reduced_homology(induced_complex(R, all.prims, full));
  return data;
}

ForbiddenData forbidden_data(const Fan& fan) {
  return forbidden_data(fan, primitive_collections(fan));
}

std::vector<std::uint32_t> forbidden_sets(const Fan& fan) {
  return forbidden_data(fan).sets;
}

bool representation_exists(const Fan& fan, const Divisor& div,
                           std::uint32_t pattern) {
  return integer_feasibility(support_system(fan, div, pattern)).feasible;
}

BigInt h0(const Fan& fan, const Divisor& div) {
  const int R = static_cast<int>(fan.rays.size());
  if (static_cast<int>(div.size()) != R)
    throw Error("divisor length does not match ray count");
  IneqSystem sys(fan.dim);
  for (int i = 0; i < R; ++i) {
    std::vector<std::int64_t> row(fan.rays[static_cast<size_t>(i)].begin(),
                                  fan.rays[static_cast<size_t>(i)].end());
    sys.add_ge(std::move(row), -div[static_cast<size_t>(i)]);
  }
  return lattice_point_count(sys);
}

bool is_acyclic(const Fan& fan, const ForbiddenData& data, const Divisor& div) {
  for (size_t i = 0; i < data.sets.size(); ++i) {
    if (!contributes_above_h0(data.homology[i], data.dim)) continue;
    if (representation_exists(fan, div, data.sets[i])) return false;
  }
  return true;
}

bool is_acyclic(const Fan& fan, const Divisor& div) {
  return is_acyclic(fan, forbidden_data(fan), div);
}

std::vector<BigInt> cohomology_dims(const Fan& fan, const ForbiddenData& data,
                                    const Divisor& div) {
  const int n = fan.dim;
  std::vector<BigInt> h(static_cast<size_t>(n) + 1, BigInt(0));
  auto contribute = [&](std::uint32_t set, const HomologyResult& hom) {
    bool any = false;
    for (int j = 0; j <= n && !any; ++j)
      if (hom.rank(n - 1 - j) != 0) any = true;
    for (int d = -1; d <= n - 1; ++d) {
      int i = d + 1;
      if (i < static_cast<int>(hom.torsion.size()) &&
          !hom.torsion[static_cast<size_t>(i)].empty())
        throw Error(
            "forbidden complex has torsion; dimensions are field-dependent");
    }
    if (!any) return;
    BigInt count = lattice_point_count(support_system(fan, div, set));
    if (count == 0) return;
    for (int j = 0; j <= n; ++j) {
      int r = hom.rank(n - 1 - j);
      if (r != 0) h[static_cast<size_t>(j)] += count * r;
    }
  };
  const std::uint32_t full =
      data.ray_count == 32 ? ~0u : ((1u << data.ray_count) - 1);
  contribute(full, data.full);
  for (size_t i = 0; i < data.sets.size(); ++i)
    contribute(data.sets[i], data.homology[i]);
  return h;
}

std::vector<BigInt> cohomology_dims(const Fan& fan, const Divisor& div) {
  return cohomology_dims(fan, forbidden_data(fan), div);
}

bool pentagon_class_acyclic(const BuiltFan& built,
                            const std::vector<std::vector<std::int64_t>>& table,
                            const std::vector<std::int64_t>& cls) {
  const int R = static_cast<int>(built.fan.rays.size());
  if (static_cast<int>(table.size()) != R)
    throw Error("class table must have one row per ray");
  const int rank = cls.empty() ? 0 : static_cast<int>(cls.size());
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != rank)
      throw Error("class table width does not match class length");

  // One aggregated variable per group whose rays all share a class row,
  // per-ray variables otherwise. Aggregation is exact: a group sum s with the
  // required sign splits into per-ray integers of that sign (parts >= 0
  // summing to s >= 0, or parts <= -1 summing to s <= -size).
  struct GroupVar {
    bool uniform = false;
    std::vector<int> rays;
  };
  std::array<GroupVar, 5> gv;
  int vars = 0;
  for (int g = 0; g < 5; ++g) {
    const auto& rays = built.groups[static_cast<size_t>(g)];
    if (rays.empty()) throw Error("pentagon group is empty");
    bool uniform = true;
    for (int ray : rays)
      if (table[static_cast<size_t>(ray)] !=
          table[static_cast<size_t>(rays[0])])
        uniform = false;
    gv[static_cast<size_t>(g)] = {uniform, rays};
    vars += uniform ? 1 : static_cast<int>(rays.size());
  }

  // Eleven sign patterns over the groups: all negative, each prim
  // (consecutive pair) nonnegative, each prim complement nonnegative.
  std::vector<std::uint32_t> patterns{0u};
  for (int i = 0; i < 5; ++i) {
    std::uint32_t pair =
        (1u << i) | (1u << ((i + 1) % 5));
    patterns.push_back(pair);
    patterns.push_back(0x1fu & ~pair);
  }

  for (std::uint32_t pat : patterns) {
    IneqSystem sys(vars);
    std::vector<std::vector<std::int64_t>> eq(
        static_cast<size_t>(rank),
        std::vector<std::int64_t>(static_cast<size_t>(vars), 0));
    int at = 0;
    for (int g = 0; g < 5; ++g) {
      const auto& grp = gv[static_cast<size_t>(g)];
      const bool nonneg = (pat >> g) & 1u;
      if (grp.uniform) {
        std::vector<std::int64_t> unit(static_cast<size_t>(vars), 0);
        unit[static_cast<size_t>(at)] = 1;
        if (nonneg)
          sys.add_ge(unit, 0);
        else
          sys.add_le(unit, -static_cast<std::int64_t>(grp.rays.size()));
        for (int k = 0; k < rank; ++k)
          eq[static_cast<size_t>(k)][static_cast<size_t>(at)] =
              table[static_cast<size_t>(grp.rays[0])][static_cast<size_t>(k)];
        ++at;
      } else {
        for (int ray : grp.rays) {
          std::vector<std::int64_t> unit(static_cast<size_t>(vars), 0);
          unit[static_cast<size_t>(at)] = 1;
          if (nonneg)
            sys.add_ge(unit, 0);
          else
            sys.add_le(unit, -1);
          for (int k = 0; k < rank; ++k)
            eq[static_cast<size_t>(k)][static_cast<size_t>(at)] =
                table[static_cast<size_t>(ray)][static_cast<size_t>(k)];
          ++at;
        }
      }
    }
    for (int k = 0; k < rank; ++k)
      sys.add_eq(eq[static_cast<size_t>(k)], cls[static_cast<size_t>(k)]);
    if (integer_feasibility(sys).feasible) return false;
  }
  return true;
}

bool is_acyclic_family(const FamilyContext& ctx,
                       const std::vector<std::int64_t>& tyv_class) {
  if (tyv_class.size() != 3)
    throw Error("family class must have three coordinates (t, y, v)");
  return pentagon_class_acyclic(ctx.built, ctx.tyv, tyv_class);
}

ExtReport ext_vanishing(const Fan& fan, const ForbiddenData& data,
                        const Divisor& d1, const Divisor& d2) {
  if (d1.size() != d2.size() || d1.size() != fan.rays.size())
    throw Error("divisor length does not match ray count");
  Divisor fwd(d1.size()), bwd(d1.size());
  for (size_t i = 0; i < d1.size(); ++i) {
    fwd[i] = d2[i] - d1[i];
    bwd[i] = d1[i] - d2[i];
  }
  ExtReport rep;
  rep.hom_forward = h0(fan, fwd);
  rep.higher_forward = is_acyclic(fan, data, fwd);
  rep.hom_backward = h0(fan, bwd);
  return rep;
}

ExtReport ext_vanishing(const Fan& fan, const Divisor& d1, const Divisor& d2) {
  return ext_vanishing(fan, forbidden_data(fan), d1, d2);
}

}  // namespace toric
