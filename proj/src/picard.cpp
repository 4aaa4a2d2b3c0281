#include "toric/picard.hpp"

#include "toric/bigint.hpp"

namespace toric {

std::vector<std::int64_t> ClassGroup::classify(const Divisor& d) const {
  if (static_cast<int>(d.size()) != ray_count)
    throw Error("classify: divisor has wrong number of coefficients");
  std::vector<std::int64_t> out(rank, 0);
  try {
    for (int r = 0; r < rank; ++r) {
      Checked64 acc{0};
      for (int i = 0; i < ray_count; ++i)
        acc += Checked64{projection(r, i)} * Checked64{d[i]};
      out[r] = acc.v;
    }
  } catch (const LaneOverflow&) {
    throw Error("classify: coefficient overflow");
  }
  return out;
}

Divisor ClassGroup::divisor_from_class(
    const std::vector<std::int64_t>& cls) const {
  if (static_cast<int>(cls.size()) != rank)
    throw Error("class has wrong number of coordinates");
  Divisor d(ray_count, 0);
  try {
    for (int i = 0; i < ray_count; ++i) {
      Checked64 acc{0};
      for (int r = 0; r < rank; ++r)
        acc += Checked64{section(i, r)} * Checked64{cls[r]};
      d[i] = acc.v;
    }
  } catch (const LaneOverflow&) {
    throw Error("divisor_from_class: coefficient overflow");
  }
  return d;
}

ClassGroup class_group(const Fan& fan) {
  const int R = static_cast<int>(fan.rays.size());
  const int n = fan.dim;
  MatI a(R, n);
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = fan.rays[i][j];
  SmithResult s = smith_normal_form(a, true);
  if (s.rank != n) throw Error("class group: rays do not span the lattice");
  for (const auto& d : s.divisors)
    if (d != 1) throw Error("class group: nontrivial invariant factors");

  ClassGroup g;
  g.ray_count = R;
  g.rank = R - n;
  g.projection = MatI(g.rank, R);
  for (int r = 0; r < g.rank; ++r)
    for (int i = 0; i < R; ++i) g.projection(r, i) = to_int64(s.u(n + r, i));
  g.section = MatI(R, g.rank);
  for (int i = 0; i < R; ++i)
    for (int r = 0; r < g.rank; ++r)
      g.section(i, r) = to_int64(s.u_inv(i, n + r));
  for (int r = 0; r < g.rank; ++r)
    for (int c = 0; c < g.rank; ++c) {
      std::int64_t acc = 0;
      for (int i = 0; i < R; ++i) acc += g.projection(r, i) * g.section(i, c);
      if (acc != (r == c ? 1 : 0))
        throw Error("class group: transform consistency check failed");
    }
  return g;
}

std::vector<std::vector<std::int64_t>> ray_class_table(
    const Fan& fan, const std::vector<int>& basis_rays) {
  ClassGroup g = class_group(fan);
  const int k = g.rank;
  if (static_cast<int>(basis_rays.size()) != k)
    throw Error("ray_class_table: need exactly rank many basis rays");
  for (int b : basis_rays)
    if (b < 0 || b >= g.ray_count) throw Error("ray_class_table: ray index out of range");

  MatI q(k, k);
  for (int r = 0; r < k; ++r)
    for (int j = 0; j < k; ++j) q(r, j) = g.projection(r, basis_rays[j]);
  BigInt det = determinant(q);
  if (det != 1 && det != -1)
    throw Error("ray_class_table: chosen ray classes are not a basis");
  MatI qinv = inverse_unimodular(q);

  std::vector<std::vector<std::int64_t>> table(
      g.ray_count, std::vector<std::int64_t>(k, 0));
  for (int i = 0; i < g.ray_count; ++i)
    for (int r = 0; r < k; ++r) {
      std::int64_t acc = 0;
      for (int j = 0; j < k; ++j) acc += qinv(r, j) * g.projection(j, i);
      table[i][r] = acc;
    }
  for (int j = 0; j < k; ++j)
    for (int r = 0; r < k; ++r)
      if (table[basis_rays[j]][r] != (r == j ? 1 : 0))
        throw Error("ray_class_table: basis rows are not the identity");
  return table;
}

std::vector<std::int64_t> FamilyContext::classify_tyv(const Divisor& d) const {
  if (d.size() != built.fan.rays.size())
    throw Error("classify: divisor has wrong number of coefficients");
  std::vector<std::int64_t> out(3, 0);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (int k = 0; k < 3; ++k) out[k] += d[i] * tyv[i][k];
  return out;
}

Divisor FamilyContext::divisor_from_tyv(
    const std::vector<std::int64_t>& c) const {
  if (c.size() != 3) throw Error("family class needs 3 coordinates (t,y,v)");
  Divisor d(built.fan.rays.size(), 0);
  d[params.n + 1] = c[0];             // t
  d[params.n - params.r] = c[1];      // y
  d[0] = c[2];                        // v_1
  return d;
}

FamilyContext make_family_context(const FamilyParams& params) {
  FamilyContext ctx;
  ctx.params = params;
  ctx.built = build_family(params);
  require_valid(ctx.built.fan);
  ctx.cls = class_group(ctx.built.fan);

  const int n = params.n, r = params.r;
  const int iy = n - r, iz = n - r + 1, it = n + 1, iu = n + 2;
  ctx.tyv = ray_class_table(ctx.built.fan, {it, iy, 0});

  std::vector<std::vector<std::int64_t>> expected(n + 3);
  for (int i = 0; i < n - r; ++i) expected[i] = {0, 0, 1};
  expected[iy] = {0, 1, 0};
  expected[iz] = {1, 1, params.b};
  for (int i = 1; i < r; ++i)
    expected[iz + i] = {1, 1, params.b - params.c[i - 1]};
  expected[it] = {1, 0, 0};
  expected[iu] = {0, -1, 1};
  if (ctx.tyv != expected)
    throw Error("family class table does not match the closed form");
  return ctx;
}

}  // namespace toric
