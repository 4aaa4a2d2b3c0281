#include "toric/batyrev.hpp"

#include <algorithm>
#include <string>

namespace toric {

namespace {

void check_pentagon(const PentagonParams& q) {
  for (int i = 0; i < 5; ++i)
    if (q.p[i] < 1) throw Error("pentagon: each group needs at least one ray");
  if (static_cast<int>(q.c.size()) != q.p[2] - 1)
    throw Error("pentagon: need p2-1 coefficients c");
  if (static_cast<int>(q.b.size()) != q.p[3])
    throw Error("pentagon: need p3 coefficients b");
  for (auto v : q.c)
    if (v < 0) throw Error("pentagon: c coefficients must be nonnegative");
  for (auto v : q.b)
    if (v < 0) throw Error("pentagon: b coefficients must be nonnegative");
}

std::vector<std::vector<int>> pentagon_prims(
    const std::array<std::vector<int>, 5>& groups) {
  std::vector<std::vector<int>> prims;
  prims.reserve(5);
  for (int i = 0; i < 5; ++i) {
    std::vector<int> p = groups[i];
    p.insert(p.end(), groups[(i + 1) % 5].begin(), groups[(i + 1) % 5].end());
    std::sort(p.begin(), p.end());
    prims.push_back(std::move(p));
  }
  return prims;
}

}  // namespace

PentagonParams FamilyParams::pentagon() const {
  PentagonParams q;
  q.p = {n - r, 1, r, 1, 1};
  q.c = c;
  q.b = {b};
  return q;
}

BuiltFan build_batyrev(const PentagonParams& params) {
  check_pentagon(params);
  const int n = params.dim();
  const int R = params.ray_count();
  const auto& p = params.p;

  BuiltFan out;
  out.fan.dim = n;
  out.fan.rays.assign(R, Ray(n, 0));
  int idx = 0;
  for (int g = 0; g < 5; ++g)
    for (int i = 0; i < p[g]; ++i) out.groups[g].push_back(idx++);
  const auto& v = out.groups[0];
  const auto& y = out.groups[1];
  const auto& z = out.groups[2];
  const auto& t = out.groups[3];
  const auto& u = out.groups[4];

  // Basis rays get standard vectors in listing order; y_1, z_1, u_1 are the
  // dependent ones.
  int e = 0;
  auto assign = [&](int ray) { out.fan.rays[ray][e++] = 1; };
  for (int i = 0; i < p[0]; ++i) assign(v[i]);
  for (int i = 1; i < p[1]; ++i) assign(y[i]);
  for (int i = 1; i < p[2]; ++i) assign(z[i]);
  for (int i = 0; i < p[3]; ++i) assign(t[i]);
  for (int i = 1; i < p[4]; ++i) assign(u[i]);

  auto& rays = out.fan.rays;
  // z_1 = -(z_2 + ... + z_{p2}) - (t_1 + ... + t_{p3})
  for (int k = 0; k < n; ++k) {
    std::int64_t acc = 0;
    for (int i = 1; i < p[2]; ++i) acc -= rays[z[i]][k];
    for (int i = 0; i < p[3]; ++i) acc -= rays[t[i]][k];
    rays[z[0]][k] = acc;
  }
  // u_1 = -(u_2 + ...) - (v_1 + ...) + sum c_i z_i + sum b_i t_i
  for (int k = 0; k < n; ++k) {
    std::int64_t acc = 0;
    for (int i = 1; i < p[4]; ++i) acc -= rays[u[i]][k];
    for (int i = 0; i < p[0]; ++i) acc -= rays[v[i]][k];
    for (int i = 1; i < p[2]; ++i) acc += params.c[i - 1] * rays[z[i]][k];
    for (int i = 0; i < p[3]; ++i) acc += params.b[i] * rays[t[i]][k];
    rays[u[0]][k] = acc;
  }
  // y_1 = -(y_2 + ...) - (z_1 + ... + z_{p2}) + (u_1 + ... + u_{p4})
  for (int k = 0; k < n; ++k) {
    std::int64_t acc = 0;
    for (int i = 1; i < p[1]; ++i) acc -= rays[y[i]][k];
    for (int i = 0; i < p[2]; ++i) acc -= rays[z[i]][k];
    for (int i = 0; i < p[4]; ++i) acc += rays[u[i]][k];
    rays[y[0]][k] = acc;
  }

  out.prims = pentagon_prims(out.groups);
  out.fan.max_cones = maximal_cones_from_primitives(R, n, out.prims);
  return out;
}

BuiltFan build_family(const FamilyParams& params) {
  const int n = params.n, r = params.r;
  if (n < 2 || r < 1 || r > n - 1) throw Error("family: need n >= 2, 1 <= r <= n-1");
  if (params.b < 0) throw Error("family: b must be nonnegative");
  if (static_cast<int>(params.c.size()) != r - 1)
    throw Error("family: need r-1 coefficients c");
  for (auto ci : params.c)
    if (ci < 0) throw Error("family: c coefficients must be nonnegative");

  BuiltFan out;
  out.fan.dim = n;
  const int R = n + 3;
  out.fan.rays.assign(R, Ray(n, 0));
  // Ray order: v_1..v_{n-r}, y, z_1..z_r, t, u.
  const int iy = n - r, iz = n - r + 1, it = n + 1, iu = n + 2;
  for (int i = 0; i < n - r; ++i) out.groups[0].push_back(i);
  out.groups[1] = {iy};
  for (int i = 0; i < r; ++i) out.groups[2].push_back(iz + i);
  out.groups[3] = {it};
  out.groups[4] = {iu};

  auto& rays = out.fan.rays;
  for (int i = 0; i < n - r; ++i) rays[i][i] = 1;
  for (int i = 0; i < r; ++i) rays[iz + i][n - r + i] = 1;
  for (int k = n - r; k < n; ++k) rays[it][k] = -1;
  for (int i = 0; i < n - r; ++i) {
    rays[iy][i] = -1;
    rays[iu][i] = -1;
  }
  for (int k = n - r; k < n; ++k) {
    std::int64_t ci = (k == n - r) ? 0 : params.c[k - (n - r) - 1];
    rays[iy][k] = ci - (params.b + 1);
    rays[iu][k] = ci - params.b;
  }

  out.prims = pentagon_prims(out.groups);
  out.fan.max_cones = maximal_cones_from_primitives(R, n, out.prims);
  return out;
}

std::int64_t family_max_cone_count(int n, int r) {
  return 2ll * r * n - 2ll * r * r + n + 1;
}

}  // namespace toric
