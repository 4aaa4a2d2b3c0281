// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each criterion is independent and exception-safe.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "toric/cohomology.hpp"
#include "toric/collections.hpp"
#include "toric/frobenius.hpp"
#include "toric/homology.hpp"

using namespace toric;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& description,
               const std::function<bool()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = false;
  std::string note;
  try {
    pass = body();
  } catch (const std::exception& e) {
    note = std::string(" [exception: ") + e.what() + "]";
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": "
            << description << " (" << ms << " ms)" << note << "\n";
  std::cout.flush();
  if (!pass) ++g_failures;
}

Fan p2() {
  Fan f;
  f.dim = 2;
  f.rays = {{1, 0}, {0, 1}, {-1, -1}};
  f.max_cones = {{0, 1}, {1, 2}, {0, 2}};
  return f;
}

Fan p1xp1() {
  Fan f;
  f.dim = 2;
  f.rays = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  f.max_cones = {{0, 2}, {1, 2}, {1, 3}, {0, 3}};
  return f;
}

// All family parameter points with n <= 6, 1 <= r <= n-1, b <= 2 and every
// twist in {0,1,2}: 537 points.
std::vector<FamilyParams> family_grid() {
  std::vector<FamilyParams> grid;
  for (int n = 2; n <= 6; ++n)
    for (int r = 1; r < n; ++r)
      for (std::int64_t b = 0; b <= 2; ++b) {
        std::vector<std::int64_t> c(static_cast<size_t>(r - 1), 0);
        while (true) {
          grid.push_back(FamilyParams{n, r, b, c});
          size_t i = 0;
          while (i < c.size() && c[i] == 2) c[i++] = 0;
          if (i == c.size()) break;
          ++c[i];
        }
      }
  return grid;
}

bool criterion_1() {
  auto f = p2();
  auto cls = class_group(f);
  auto img = bondal_image(f, cls);
  return img.stabilized &&
         img.classes == std::vector<std::vector<std::int64_t>>{
                            {-2}, {-1}, {0}};
}

bool criterion_2() {
  auto f = p2();
  auto cls = class_group(f);
  auto bp = b_prime(f, cls, bondal_image(f, cls));
  std::vector<std::vector<std::int64_t>> expect;
  for (std::int64_t d = -5; d <= 3; ++d) expect.push_back({d});
  return bp == expect;
}

bool criterion_3() {
  std::vector<Fan> fans = {p2(), p1xp1(),
                           build_family(FamilyParams{2, 1, 0, {}}).fan,
                           build_family(FamilyParams{3, 1, 1, {}}).fan,
                           build_family(FamilyParams{4, 2, 0, {0}}).fan};
  for (const auto& fan : fans) {
    auto cls = class_group(fan);
    const Divisor zero(fan.rays.size(), 0);
    for (std::int64_t m : {1, 2, 3, 5}) {
      auto a = thomsen_split(fan, cls, zero, m);
      auto b = bondal_split(fan, cls, zero, m);
      if (a.classes != b.classes) return false;
      std::int64_t rank = 1;
      for (int i = 0; i < fan.dim; ++i) rank *= m;
      if (a.total != rank || b.total != rank) return false;
    }
    // the division method is independent of the anchor cone
    auto base = thomsen_split(fan, cls, zero, 2, 0);
    for (int anchor = 1; anchor < static_cast<int>(fan.max_cones.size());
         ++anchor)
      if (thomsen_split(fan, cls, zero, 2, anchor).classes != base.classes)
        return false;
  }
  return true;
}

bool criterion_4() {
  // every pentagon with at most 9 rays, uniform coefficients in {0,1,2}
  int checked = 0;
  for (int total = 5; total <= 9; ++total)
    for (int p0 = 1; p0 < total; ++p0)
      for (int p1 = 1; p0 + p1 < total; ++p1)
        for (int p2v = 1; p0 + p1 + p2v < total; ++p2v)
          for (int p3 = 1; p0 + p1 + p2v + p3 < total; ++p3) {
            const int p4 = total - p0 - p1 - p2v - p3;
            for (std::int64_t b = 0; b <= 2; ++b)
              for (std::int64_t c = 0; c <= 2; ++c) {
                PentagonParams params;
                params.p = {p0, p1, p2v, p3, p4};
                params.c = std::vector<std::int64_t>(
                    static_cast<size_t>(p2v - 1), c);
                params.b = std::vector<std::int64_t>(
                    static_cast<size_t>(p3), b);
                auto built = build_batyrev(params);
                const int R = static_cast<int>(built.fan.rays.size());
                auto brute = non_acyclic_subsets(R, built.prims);
                auto closed = pentagon_non_acyclic_sets(R, built.groups);
                if (brute != closed) return false;
                ++checked;
              }
          }
  return checked == 126 * 9;
}

bool criterion_5() {
  std::mt19937 rng(424242);
  int glue_checked = 0, delete_checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);  // up to 10 vertices
    std::vector<std::vector<int>> raw;
    const int prim_count = 1 + static_cast<int>(rng() % 6);
    for (int p = 0; p < prim_count; ++p) {
      std::vector<int> prim;
      for (int v = 0; v < n; ++v)
        if (rng() % 3 == 0) prim.push_back(v);
      if (prim.empty()) prim.push_back(static_cast<int>(rng() % n));
      raw.push_back(prim);
    }
    auto c = make_complex(n, raw);
    auto oracle = snf_homology(c);
    auto fast = reduced_homology(c);
    if (fast.ranks != oracle.ranks || fast.torsion != oracle.torsion)
      return false;

    auto shifted_match = [&](const ReductionStep& step) {
      auto inner = snf_homology(step.complex);
      for (int d = -1; d <= n; ++d)
        if (oracle.rank(d) != inner.rank(d - step.shift)) return false;
      return true;
    };
    auto glue = reduce_glue(c);
    if (glue.complex.vertices < c.vertices) {
      if (!shifted_match(glue)) return false;
      ++glue_checked;
    }
    for (size_t pi = 0; pi < c.prims.size(); ++pi) {
      bool used = false;
      for (int v = 0; v < c.vertices && !used; ++v) {
        if (!(c.prims[pi] >> v & 1u)) continue;
        int membership = 0;
        for (auto mask : c.prims)
          if (mask >> v & 1u) ++membership;
        if (membership != 1) continue;
        if (!shifted_match(reduce_delete(c, static_cast<int>(pi), v)))
          return false;
        ++delete_checked;
        used = true;
      }
      if (used) break;
    }
  }
  return glue_checked >= 100 && delete_checked >= 100;
}

bool criterion_6() {
  if (family_grid().size() != 537) return false;
  int thm_failing_points = 0;
  for (const auto& params : family_grid()) {
    auto ctx = make_family_context(params);
    auto coll = build_col(params, Col2Mode::Eq6);
    const auto size = static_cast<std::int64_t>(coll.elements.size());
    if (size != family_max_cone_count(params.n, params.r)) return false;
    if (size != 2 * params.r * params.n - 2 * params.r * params.r +
                    params.n + 1)
      return false;
    if (size != static_cast<std::int64_t>(ctx.built.fan.max_cones.size()))
      return false;
    if (!verify_strongly_exceptional(ctx, coll).pass) return false;
    // the other half-range is recorded, not asserted
    if (!verify_strongly_exceptional(
             ctx, build_col(params, Col2Mode::Thm))
             .pass)
      ++thm_failing_points;
  }
  std::cout << "  note: theorem-form index range fails strong "
               "exceptionality at "
            << thm_failing_points << " of 537 grid points\n";
  return true;
}

bool criterion_7() {
  for (const auto& params : family_grid()) {
    auto ctx = make_family_context(params);
    auto diff = build_diff(params);
    if (!diff.matches_pairwise) return false;
    for (const auto& cls : diff.all) {
      std::vector<std::int64_t> tyv(cls.begin(), cls.end());
      if (!is_acyclic_family(ctx, tyv)) return false;
    }
    if (params.n <= 4) {
      auto data = forbidden_data(ctx.built.fan, ctx.built.prims);
      for (const auto& cls : diff.all) {
        std::vector<std::int64_t> tyv(cls.begin(), cls.end());
        auto h = cohomology_dims(ctx.built.fan, data,
                                 ctx.divisor_from_tyv(tyv));
        for (size_t j = 1; j < h.size(); ++j)
          if (h[j] != BigInt(0)) return false;
      }
    }
  }
  return true;
}

bool criterion_8() {
  for (auto params :
       {FamilyParams{2, 1, 0, {}}, FamilyParams{3, 1, 0, {}},
        FamilyParams{3, 2, 1, {0}}, FamilyParams{4, 2, 0, {0}}}) {
    auto rep = koszul_generation_check(params, build_col(params), 4);
    if (!rep.all_covered || !rep.rules_exercised) return false;
    if (rep.covered != rep.window_size || rep.window_size != 729)
      return false;
  }
  return true;
}

bool criterion_9() {
  for (std::int64_t k = 1; k <= 40; ++k) {
    auto rep = counterexample_report(k, 4);
    if (rep.inequality_holds != (k > 32)) return false;
    if (!rep.max_cones_match) return false;
    if (rep.max_cones_formula != BigInt(k) * k * k + 2 * k * k + 2 * k)
      return false;
    if (!rep.all_pairs_valid || !rep.all_r_certified) return false;
    if (k >= 2 && rep.samples.empty()) return false;
    for (const auto& s : rep.samples)
      if (!s.distinct || !s.in_s || !s.diff_in_r || !s.non_acyclic)
        return false;
  }
  return true;
}

bool criterion_10() {
  std::mt19937 rng(777);
  std::uniform_int_distribution<std::int64_t> coeff(-3, 3);
  struct Target {
    Fan fan;
    int count;
  };
  std::vector<Target> targets = {
      {p2(), 25}, {build_family(FamilyParams{2, 1, 0, {}}).fan, 25}};
  for (const auto& target : targets) {
    auto cls = class_group(target.fan);
    auto bp = b_prime(target.fan, cls, bondal_image(target.fan, cls));
    std::set<std::vector<std::int64_t>> allowed(bp.begin(), bp.end());
    for (int trial = 0; trial < target.count; ++trial) {
      Divisor d(target.fan.rays.size());
      for (auto& a : d) a = coeff(rng);
      for (std::int64_t m : {8, 16}) {
        auto split = thomsen_split(target.fan, cls, d, m);
        for (const auto& [c, mult] : split.classes)
          if (!allowed.count(c)) return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "plane push-forward image stabilizes to the three twists",
            criterion_1);
  criterion(2, "perturbed plane image is the nine-twist window",
            criterion_2);
  criterion(3, "division and floor splittings agree on five fans, all "
               "orders and anchors",
            criterion_3);
  criterion(4, "pentagon forbidden sets match brute enumeration on all "
               "1134 small pentagons",
            criterion_4);
  criterion(5, "glue/delete reductions preserve shifted homology on 500 "
               "random complexes",
            criterion_5);
  criterion(6, "equation-form collections are strongly exceptional across "
               "the 537-point grid",
            criterion_6);
  criterion(7, "every closed-form difference class is acyclic across the "
               "grid",
            criterion_7);
  criterion(8, "generation closure covers the radius-4 window on four "
               "parameter sets",
            criterion_8);
  criterion(9, "exclusion arithmetic flips exactly past the threshold "
               "group size",
            criterion_9);
  criterion(10, "random push-forward summands stay inside the perturbed "
                "image",
            criterion_10);
  if (g_failures > 0) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
