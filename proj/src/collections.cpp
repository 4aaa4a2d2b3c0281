#include "toric/collections.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "toric/cohomology.hpp"
#include "toric/common.hpp"
#include "toric/frobenius.hpp"

namespace toric {

namespace {

void check_family_params(const FamilyParams& params) {
  if (params.r < 1 || params.n <= params.r)
    throw Error("collection: need n > r >= 1");
  if (params.b < 0) throw Error("collection: b must be nonnegative");
  if (static_cast<int>(params.c.size()) != params.r - 1)
    throw Error("collection: c must have r - 1 entries");
  for (auto ci : params.c)
    if (ci < 0) throw Error("collection: c entries must be nonnegative");
}

std::array<std::int64_t, 3> col_class(std::int64_t n, std::int64_t r,
                                      std::int64_t b, bool prime,
                                      std::int64_t s, std::int64_t q) {
  std::int64_t v = q - b * s - (n - r);
  if (!prime) return {-s, -s, v};
  return {-s, -(s - 1), v};
}

std::uint32_t full_ray_mask(const Fan& fan) {
  auto R = fan.rays.size();
  if (R >= 32) throw Error("collection: too many rays for h^0 pattern checks");
  return static_cast<std::uint32_t>((1u << R) - 1u);
}

}  // namespace

OrderedCollection build_col(const FamilyParams& params, Col2Mode mode) {
  check_family_params(params);
  const std::int64_t n = params.n, r = params.r, b = params.b;
  const std::int64_t s2_lo = mode == Col2Mode::Eq6 ? 1 : 0;
  const std::int64_t s2_hi = mode == Col2Mode::Eq6 ? r : r - 1;

  OrderedCollection coll;
  for (std::int64_t s = r; s >= 0; --s) {
    const bool has_prime = s >= s2_lo && s <= s2_hi;
    for (std::int64_t q = 0; q <= n - r; ++q) {
      coll.elements.push_back({false, s, q, col_class(n, r, b, false, s, q)});
      if (has_prime && q <= n - r - 1)
        coll.elements.push_back({true, s, q, col_class(n, r, b, true, s, q)});
    }
  }

  const std::int64_t expected = (r + 1) * (n - r + 1) + r * (n - r);
  if (static_cast<std::int64_t>(coll.elements.size()) != expected ||
      expected != family_max_cone_count(params.n, params.r))
    throw Error("collection: size bookkeeping failed");
  std::set<std::array<std::int64_t, 3>> seen;
  for (const auto& e : coll.elements)
    if (!seen.insert(e.cls).second)
      throw Error("collection: duplicate class");
  return coll;
}

DiffSet build_diff(const FamilyParams& params, Col2Mode mode) {
  check_family_params(params);
  const std::int64_t n = params.n, r = params.r, b = params.b;
  DiffSet out;
  for (std::int64_t s = -r; s <= r; ++s)
    for (std::int64_t q = r - n; q <= n - r; ++q)
      out.diff1.push_back({s, s, b * s + q});
  for (std::int64_t s = -r + 1; s <= r; ++s)
    for (std::int64_t q = r - n + 1; q <= n - r; ++q)
      out.diff2.push_back({s, s - 1, b * s + q});
  for (const auto& d : out.diff2)
    out.diff3.push_back({-d[0], -d[1], -d[2]});

  std::set<std::array<std::int64_t, 3>> uni(out.diff1.begin(),
                                            out.diff1.end());
  uni.insert(out.diff2.begin(), out.diff2.end());
  uni.insert(out.diff3.begin(), out.diff3.end());
  out.all.assign(uni.begin(), uni.end());

  auto coll = build_col(params, mode);
  std::set<std::array<std::int64_t, 3>> pairwise;
  for (const auto& a : coll.elements)
    for (const auto& c : coll.elements)
      pairwise.insert({a.cls[0] - c.cls[0], a.cls[1] - c.cls[1],
                       a.cls[2] - c.cls[2]});
  out.matches_pairwise = pairwise == uni;
  return out;
}

namespace {

template <typename Key>
struct PairChecker {
  std::map<Key, bool> acyclic_memo, h0zero_memo;
  std::function<bool(const Key&)> acyclic_fn, h0zero_fn;

  bool acyclic(const Key& d) {
    auto it = acyclic_memo.find(d);
    if (it != acyclic_memo.end()) return it->second;
    bool v = acyclic_fn(d);
    acyclic_memo.emplace(d, v);
    return v;
  }
  bool h0_zero(const Key& d) {
    auto it = h0zero_memo.find(d);
    if (it != h0zero_memo.end()) return it->second;
    bool v = h0zero_fn(d);
    h0zero_memo.emplace(d, v);
    return v;
  }
};

template <typename Key, typename Sub>
ExceptionalReport run_pairs(const std::vector<Key>& classes,
                            PairChecker<Key>& chk, Sub sub,
                            bool structure_ok) {
  ExceptionalReport rep;
  rep.structure_sheaf_ok = structure_ok;
  const std::size_t N = classes.size();
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t j = 0; j <= k; ++j) {
      ++rep.pairs_checked;
      if (j == k) continue;  // covered by the structure-sheaf check
      Key fwd = sub(classes[k], classes[j]);
      if (!chk.acyclic(fwd))
        rep.failures.push_back({j, k, "higher_cohomology_forward"});
      Key bwd = sub(classes[j], classes[k]);
      if (!chk.acyclic(bwd))
        rep.failures.push_back({j, k, "higher_cohomology_backward"});
      if (!chk.h0_zero(bwd))
        rep.failures.push_back({j, k, "hom_backward_nonzero"});
    }
  rep.pass = structure_ok && rep.failures.empty();
  return rep;
}

}  // namespace

ExceptionalReport verify_strongly_exceptional(const FamilyContext& ctx,
                                              const OrderedCollection& coll) {
  using Key = std::array<std::int64_t, 3>;
  const auto& fan = ctx.built.fan;
  const std::uint32_t full = full_ray_mask(fan);

  PairChecker<Key> chk;
  chk.acyclic_fn = [&](const Key& d) {
    return is_acyclic_family(ctx, {d[0], d[1], d[2]});
  };
  chk.h0zero_fn = [&](const Key& d) {
    auto div = ctx.divisor_from_tyv({d[0], d[1], d[2]});
    return !representation_exists(fan, div, full);
  };

  Divisor zero(fan.rays.size(), 0);
  bool structure_ok =
      chk.acyclic({0, 0, 0}) && h0(fan, zero) == 1;

  std::vector<Key> classes;
  classes.reserve(coll.elements.size());
  for (const auto& e : coll.elements) classes.push_back(e.cls);
  auto sub = [](const Key& a, const Key& b) -> Key {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
  };
  return run_pairs(classes, chk, sub, structure_ok);
}

ExceptionalReport verify_strongly_exceptional(
    const Fan& fan, const ClassGroup& cls,
    const std::vector<std::vector<std::int64_t>>& classes) {
  using Key = std::vector<std::int64_t>;
  for (const auto& c : classes)
    if (static_cast<int>(c.size()) != cls.rank)
      throw Error("collection: class coordinate size mismatch");
  const std::uint32_t full = full_ray_mask(fan);
  auto data = forbidden_data(fan);

  PairChecker<Key> chk;
  chk.acyclic_fn = [&](const Key& d) {
    return is_acyclic(fan, data, cls.divisor_from_class(d));
  };
  chk.h0zero_fn = [&](const Key& d) {
    return !representation_exists(fan, cls.divisor_from_class(d), full);
  };

  Divisor zero(fan.rays.size(), 0);
  bool structure_ok =
      chk.acyclic(Key(cls.rank, 0)) && h0(fan, zero) == 1;

  auto sub = [](const Key& a, const Key& b) {
    Key d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
  };
  return run_pairs(classes, chk, sub, structure_ok);
}

KoszulReport koszul_generation_check(const FamilyParams& params,
                                     const OrderedCollection& coll,
                                     std::int64_t window) {
  check_family_params(params);
  if (window < 0) throw Error("koszul: window must be nonnegative");
  const std::int64_t n = params.n, r = params.r, b = params.b;
  std::vector<std::int64_t> cz(1, 0);  // first z twist is 0 by normalization
  cz.insert(cz.end(), params.c.begin(), params.c.end());

  using Cls = std::array<std::int64_t, 3>;
  // Each rule is the set of class offsets of one Koszul complex's terms;
  // any single missing term is generated by the remaining ones.
  std::vector<std::vector<Cls>> rules;
  {
    std::set<Cls> a_off, b_off, c_off, d_off, e_off;
    for (std::int64_t eps = 0; eps <= 1; ++eps)
      for (std::int64_t j = 0; j <= n - r; ++j) {
        a_off.insert({0, -eps, -j});      // twists by y and the v rays
        b_off.insert({0, -eps, eps + j});  // dual: u and the v rays
      }
    for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
      std::int64_t size = 0, zsum = 0;
      for (std::int64_t i = 0; i < r; ++i)
        if (mask & (1u << i)) {
          ++size;
          zsum += b - cz[i];
        }
      for (std::int64_t eps = 0; eps <= 1; ++eps) {
        c_off.insert({-size, -eps - size, -zsum});  // y and the z rays
        d_off.insert({-size - eps, -size, -zsum});  // z rays and t
      }
    }
    for (std::int64_t e1 = 0; e1 <= 1; ++e1)
      for (std::int64_t e2 = 0; e2 <= 1; ++e2)
        e_off.insert({-e1, e2, -e2});  // t and u
    for (auto* s : {&a_off, &b_off, &c_off, &d_off, &e_off})
      rules.emplace_back(s->begin(), s->end());
  }

  auto in_window = [&](const Cls& x) {
    return std::abs(x[0]) <= window && std::abs(x[1]) <= window &&
           std::abs(x[2]) <= window;
  };

  KoszulReport rep;
  rep.window = window;
  const std::int64_t side = 2 * window + 1;
  rep.window_size = side * side * side;

  std::set<Cls> present;
  for (const auto& e : coll.elements) {
    if (in_window(e.cls))
      present.insert(e.cls);
    else
      ++rep.outside_window;
  }
  rep.start_size = static_cast<std::int64_t>(present.size());

  bool changed = true;
  while (changed) {
    changed = false;
    ++rep.iterations;
    for (std::int64_t t = -window; t <= window; ++t)
      for (std::int64_t y = -window; y <= window; ++y)
        for (std::int64_t v = -window; v <= window; ++v) {
          const Cls anchor{t, y, v};
          for (const auto& rule : rules) {
            bool fits = true;
            int missing = 0;
            Cls target{};
            for (const auto& off : rule) {
              Cls term{anchor[0] + off[0], anchor[1] + off[1],
                       anchor[2] + off[2]};
              if (!in_window(term)) {
                fits = false;
                break;
              }
              if (!present.count(term)) {
                if (++missing > 1) break;
                target = term;
              }
            }
            if (!fits) continue;
            rep.rules_exercised = true;
            if (missing == 1) {
              present.insert(target);
              ++rep.additions;
              changed = true;
            }
          }
        }
  }

  rep.covered = static_cast<std::int64_t>(present.size());
  rep.all_covered = rep.covered == rep.window_size;
  if (!rep.all_covered) {
    for (std::int64_t t = -window; t <= window && rep.uncovered.size() < 50;
         ++t)
      for (std::int64_t y = -window; y <= window && rep.uncovered.size() < 50;
           ++y)
        for (std::int64_t v = -window;
             v <= window && rep.uncovered.size() < 50; ++v)
          if (!present.count({t, y, v})) rep.uncovered.push_back({t, y, v});
  }
  return rep;
}

namespace {

// The counterexample pentagon: group sizes (1, k, 1, k, k), all twists zero.
BuiltFan counterexample_fan(std::int64_t k) {
  PentagonParams pp;
  pp.p = {1, static_cast<int>(k), 1, static_cast<int>(k),
          static_cast<int>(k)};
  pp.c = {};
  pp.b.assign(static_cast<std::size_t>(k), 0);
  return build_batyrev(pp);
}

// Ray divisor classes in the (z1, y1, u1) ray-class basis: closed form.
std::vector<std::vector<std::int64_t>> counterexample_table(
    const BuiltFan& built) {
  const std::size_t R = built.fan.rays.size();
  std::vector<std::vector<std::int64_t>> table(R);
  const std::array<std::vector<std::int64_t>, 5> rows = {
      std::vector<std::int64_t>{0, 1, 1},   // v group
      std::vector<std::int64_t>{0, 1, 0},   // y group
      std::vector<std::int64_t>{1, 0, 0},   // z group
      std::vector<std::int64_t>{1, -1, 0},  // t group
      std::vector<std::int64_t>{0, 0, 1}};  // u group
  for (int g = 0; g < 5; ++g)
    for (int ray : built.groups[g]) table[ray] = rows[g];
  return table;
}

bool in_box_s(std::int64_t k, const std::array<std::int64_t, 3>& zyu) {
  const std::int64_t a = -zyu[0], b = -zyu[2], c = -zyu[0] - zyu[1];
  return 0 <= a && a <= k && 0 <= b && b <= k && 0 <= c && c <= k;
}

bool in_box_r(std::int64_t k, const std::array<std::int64_t, 3>& zyu) {
  const std::int64_t a = zyu[0], b = zyu[1] + zyu[0], c = zyu[2];
  return 2 * a >= k && a <= k && -k <= b && 2 * b <= -k - 2 && 0 <= c &&
         c <= k;
}

// Closed-form certifying sign vector for an R-box class (a, b-a, c): group
// sums (v, y, z, t, u) realizing the class with v and y negative (one of the
// eleven admissible consecutive sign patterns) and the rest nonnegative.
std::array<std::int64_t, 5> r_witness(std::int64_t k, std::int64_t a,
                                      std::int64_t b, std::int64_t c) {
  const std::int64_t az = b + k + 1;
  return {-1, -k, az, a - az, c + 1};
}

bool witness_valid(std::int64_t k,
                   const std::vector<std::vector<std::int64_t>>& rows_by_group,
                   const std::array<std::int64_t, 5>& alpha, std::int64_t a,
                   std::int64_t b, std::int64_t c) {
  // Sign thresholds: group sums realize per-ray signs iff a negative group's
  // sum is <= -(group size) and a nonnegative group's sum is >= 0.
  if (alpha[0] > -1 || alpha[1] > -k) return false;
  if (alpha[2] < 0 || alpha[3] < 0 || alpha[4] < 0) return false;
  std::array<std::int64_t, 3> cls{};
  for (int g = 0; g < 5; ++g)
    for (int i = 0; i < 3; ++i) cls[i] += alpha[g] * rows_by_group[g][i];
  return cls == std::array<std::int64_t, 3>{a, b - a, c};
}

}  // namespace

CounterexampleReport counterexample_report(std::int64_t k, int max_samples) {
  if (k < 1) throw Error("counterexample: k must be >= 1");
  CounterexampleReport rep;
  rep.k = k;
  const BigInt K = k;
  rep.s_size = (K + 1) * (K + 1) * (K + 1);
  rep.paper_excluded_bound = K * K * K / 32;
  rep.max_cones_formula = K * K * K + 2 * K * K + 2 * K;
  rep.inequality_holds =
      32 * (K + 1) * (K + 1) * (K + 1) - K * K * K < 32 * rep.max_cones_formula;

  auto built = counterexample_fan(k);
  const int R = static_cast<int>(built.fan.rays.size());
  const int n = built.fan.dim;
  rep.max_cones = maximal_cones_from_primitives(R, n, built.prims).size();
  rep.max_cones_match = rep.max_cones == rep.max_cones_formula;
  rep.exact_inequality_holds = false;  // set after the pair count below

  auto table = counterexample_table(built);
  const int z1 = built.groups[2][0], y1 = built.groups[1][0],
            u1 = built.groups[4][0];
  if (k <= 3) {
    Fan fan = built.fan;
    fan.max_cones = maximal_cones_from_primitives(R, n, built.prims);
    rep.fan_validated = validate_fan(fan).ok();
    if (ray_class_table(fan, {z1, y1, u1}) != table)
      throw Error("counterexample: closed-form class table mismatch");
    rep.class_table_checked = true;
  }
  std::vector<std::vector<std::int64_t>> rows_by_group(5);
  for (int g = 0; g < 5; ++g) rows_by_group[g] = table[built.groups[g][0]];

  // Exact enumeration of the parity-constrained exclusion pairs.
  std::vector<std::array<std::int64_t, 3>> triples;
  for (std::int64_t a = k; 2 * a >= k; a -= 2)
    for (std::int64_t b = -k; 2 * b <= -k - 2; b += 2)
      for (std::int64_t c = k % 2 == 0 ? 0 : 1; c <= k; c += 2)
        triples.push_back({a, b, c});
  rep.excluded_lower_bound = triples.size();
  rep.exact_inequality_holds =
      rep.s_size - rep.excluded_lower_bound < rep.max_cones;

  rep.all_pairs_valid = true;  // vacuously so when no pairs exist
  std::vector<WitnessSample> all_samples;
  for (const auto& abc : triples) {
    const std::int64_t a = abc[0], b = abc[1], c = abc[2];
    WitnessSample w;
    w.p_plus = {-(k + a) / 2, (a - b) / 2, -(k + c) / 2};
    w.p_minus = {-(k - a) / 2, (b - a) / 2, -(k - c) / 2};
    for (int i = 0; i < 3; ++i) w.diff[i] = w.p_minus[i] - w.p_plus[i];
    w.distinct = w.p_plus != w.p_minus;
    w.in_s = in_box_s(k, w.p_plus) && in_box_s(k, w.p_minus);
    w.diff_in_r = in_box_r(k, w.diff);
    w.alpha = r_witness(k, a, b, c);
    if (!w.distinct || !w.in_s || !w.diff_in_r) rep.all_pairs_valid = false;
    all_samples.push_back(w);
  }

  // Certify every class in the box R by the closed-form sign vector.
  rep.all_r_certified = true;
  for (std::int64_t a = k; 2 * a >= k; --a)
    for (std::int64_t b = -k; 2 * b <= -k - 2; ++b)
      for (std::int64_t c = 0; c <= k; ++c) {
        ++rep.r_size;
        auto alpha = r_witness(k, a, b, c);
        if (!witness_valid(k, rows_by_group, alpha, a, b, c))
          rep.all_r_certified = false;
      }

  // Engine-certify a spread of sampled pairs.
  if (!all_samples.empty() && max_samples > 0) {
    const std::size_t stride =
        std::max<std::size_t>(1, all_samples.size() / max_samples);
    for (std::size_t i = 0; i < all_samples.size() &&
                            rep.samples.size() <
                                static_cast<std::size_t>(max_samples);
         i += stride) {
      WitnessSample w = all_samples[i];
      w.non_acyclic = !pentagon_class_acyclic(
          built, table, {w.diff[0], w.diff[1], w.diff[2]});
      rep.samples.push_back(w);
    }
  }
  return rep;
}

BondalBoxReport section5_bondal_box(std::int64_t k, int window,
                                    std::int64_t max_m) {
  if (k < 1) throw Error("counterexample: k must be >= 1");
  BondalBoxReport rep;
  rep.k = k;
  rep.z_range = {-k, 0};
  rep.y_range = {-k, k - 1};
  rep.u_range = {-k, 0};
  if (k > 3) return rep;  // torus-image enumeration only at desk scale

  auto built = counterexample_fan(k);
  Fan fan = built.fan;
  fan.max_cones = maximal_cones_from_primitives(
      static_cast<int>(fan.rays.size()), fan.dim, built.prims);
  auto cls = class_group(fan);
  auto table = ray_class_table(
      fan, {built.groups[2][0], built.groups[1][0], built.groups[4][0]});

  auto img = bondal_image(fan, cls, window, max_m);
  rep.brute_computed = true;
  rep.stabilized = img.stabilized;

  std::set<std::array<std::int64_t, 3>> classes;
  for (const auto& repdiv : img.representatives) {
    std::array<std::int64_t, 3> zyu{};
    for (std::size_t rho = 0; rho < repdiv.size(); ++rho)
      for (int i = 0; i < 3; ++i) zyu[i] += repdiv[rho] * table[rho][i];
    classes.insert(zyu);
  }
  rep.b_size = static_cast<std::int64_t>(classes.size());
  rep.b_in_s = true;
  for (const auto& zyu : classes)
    if (!in_box_s(k, zyu)) {
      rep.b_in_s = false;
      if (rep.violations.size() < 20) rep.violations.push_back(zyu);
    }
  return rep;
}

FamilyBoxReport family_box_report(std::int64_t n, std::int64_t r,
                                  std::int64_t b, std::int64_t c,
                                  Col2Mode mode) {
  if (r < 1 || n <= r) throw Error("family box: need n > r >= 1");
  if (c < 0 || b < c) throw Error("family box: need 0 <= c <= b");
  FamilyBoxReport rep;
  rep.n = n;
  rep.r = r;
  rep.b = b;
  rep.c = c;
  rep.cr_le_b = c * r <= b;

  FamilyParams params{static_cast<int>(n), static_cast<int>(r), b,
                      std::vector<std::int64_t>(r - 1, 0)};
  auto coll = build_col(params, mode);

  auto in_s = [&](std::int64_t t, std::int64_t y, std::int64_t v) {
    if (y != t && y != t + 1) return false;
    const std::int64_t s = -t;
    if (s < 0 || s > r) return false;
    const std::int64_t lo = -(n - r) - c - (b - c) * s;
    const std::int64_t hi = (b - c) * (1 - s);
    return lo <= v && v <= hi;
  };
  auto contained_with = [&](std::int64_t delta) {
    for (const auto& e : coll.elements)
      if (!in_s(e.cls[0], e.cls[1], e.cls[2] + delta)) return false;
    return true;
  };

  rep.contained = contained_with(0);
  const std::int64_t dmax = (n - r) + (b + c + 2) * (r + 2);
  for (std::int64_t d = 0; d <= dmax && !rep.contained_up_to_twist; ++d)
    for (std::int64_t sign : {1, -1}) {
      if (d == 0 && sign < 0) continue;
      if (contained_with(sign * d)) {
        rep.contained_up_to_twist = true;
        rep.twist = sign * d;
        break;
      }
    }
  return rep;
}

}  // namespace toric
