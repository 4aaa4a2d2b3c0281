#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "toric/batyrev.hpp"
#include "toric/fan.hpp"
#include "toric/matrix.hpp"
#include "toric/picard.hpp"

using namespace toric;

namespace {

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

}  // namespace

TEST_CASE("projective plane validates") {
  auto check = validate_fan(p2());
  CHECK(check.smooth);
  CHECK(check.pseudo_manifold);
  CHECK(check.ok());
}

TEST_CASE("product of lines validates") { CHECK(validate_fan(p1xp1()).ok()); }

TEST_CASE("non-primitive ray is rejected") {
  Fan f = p2();
  f.rays[0] = {2, 0};
  auto check = validate_fan(f);
  CHECK_FALSE(check.ok());
  CHECK_FALSE(check.errors.empty());
}

TEST_CASE("singular cone is rejected") {
  Fan f;
  f.dim = 2;
  f.rays = {{1, 0}, {1, 2}, {-1, -1}};
  f.max_cones = {{0, 1}, {1, 2}, {0, 2}};
  CHECK_FALSE(validate_fan(f).smooth);
}

TEST_CASE("missing cone breaks the pseudo-manifold check") {
  Fan f = p2();
  f.max_cones.pop_back();
  auto check = validate_fan(f);
  CHECK(check.smooth);
  CHECK_FALSE(check.pseudo_manifold);
  CHECK_THROWS_AS(require_valid(f), Error);
}

TEST_CASE("primitive collections of the basic fans") {
  CHECK(primitive_collections(p2()) ==
        std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(primitive_collections(p1xp1()) ==
        std::vector<std::vector<int>>{{0, 1}, {2, 3}});
}

TEST_CASE("maximal cones recovered from primitive collections") {
  auto f = p2();
  CHECK(maximal_cones_from_primitives(3, 2, primitive_collections(f)) ==
        std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
  auto g = p1xp1();
  auto cones = maximal_cones_from_primitives(4, 2, primitive_collections(g));
  CHECK(cones == std::vector<std::vector<int>>{{0, 2}, {0, 3}, {1, 2},
                                               {1, 3}});
}

TEST_CASE("family fan construction") {
  for (auto [n, r, b] : {std::array<std::int64_t, 3>{2, 1, 0},
                         {3, 1, 1},
                         {4, 2, 2},
                         {5, 3, 1}}) {
    FamilyParams params{static_cast<int>(n), static_cast<int>(r), b,
                        std::vector<std::int64_t>(r > 0 ? r - 1 : 0, 1)};
    CAPTURE(n);
    CAPTURE(r);
    auto built = build_family(params);
    CHECK(static_cast<int>(built.fan.rays.size()) == n + 3);
    CHECK(static_cast<std::int64_t>(built.fan.max_cones.size()) ==
          family_max_cone_count(params.n, params.r));
    CHECK(validate_fan(built.fan).ok());
    CHECK(built.prims.size() == 5);
    // the prims computed from scratch agree with the declared ones
    auto prims = primitive_collections(built.fan);
    auto declared = built.prims;
    std::sort(declared.begin(), declared.end());
    std::sort(prims.begin(), prims.end());
    CHECK(prims == declared);
  }
}

TEST_CASE("negative twists are rejected, large ones accepted") {
  CHECK_THROWS_AS(build_family(FamilyParams{3, 2, 1, {-1}}), Error);
  // c_i > b is legal
  auto built = build_family(FamilyParams{3, 2, 1, {4}});
  CHECK(validate_fan(built.fan).ok());
}

TEST_CASE("pentagon fan construction") {
  PentagonParams params;
  params.p = {1, 1, 1, 1, 1};
  params.c = {};
  params.b = {0};
  auto built = build_batyrev(params);
  CHECK(built.fan.dim == 2);
  CHECK(built.fan.rays.size() == 5);
  CHECK(built.fan.max_cones.size() == 5);
  CHECK(validate_fan(built.fan).ok());

  params.p = {2, 1, 2, 1, 2};
  params.c = {1};
  params.b = {2};
  auto big = build_batyrev(params);
  CHECK(big.fan.dim == 5);
  CHECK(big.fan.rays.size() == 8);
  CHECK(validate_fan(big.fan).ok());
  for (int i = 0; i < 5; ++i)
    CHECK(static_cast<int>(big.groups[static_cast<size_t>(i)].size()) ==
          params.p[static_cast<size_t>(i)]);
}

TEST_CASE("family parameters reduce to pentagon parameters") {
  FamilyParams params{4, 2, 3, {1}};
  auto p = params.pentagon();
  CHECK(p.p == std::array<int, 5>{2, 1, 2, 1, 1});
  CHECK(p.c == std::vector<std::int64_t>{1});
  CHECK(p.b == std::vector<std::int64_t>{3});
  auto a = build_family(params), b = build_batyrev(p);
  CHECK(a.fan.rays.size() == b.fan.rays.size());
  CHECK(a.fan.max_cones.size() == b.fan.max_cones.size());
}

TEST_CASE("class group of the projective plane") {
  auto cls = class_group(p2());
  CHECK(cls.rank == 1);
  auto one = cls.classify({1, 0, 0});
  CHECK(cls.classify({0, 1, 0}) == one);
  CHECK(cls.classify({0, 0, 1}) == one);
  auto anti = cls.classify({1, 1, 1});
  CHECK(anti[0] == 3 * one[0]);
  // classify is a retraction of divisor_from_class
  for (std::int64_t d : {-2, 0, 5})
    CHECK(cls.classify(cls.divisor_from_class({d})) ==
          std::vector<std::int64_t>{d});
}

TEST_CASE("class group rank is ray count minus dimension") {
  CHECK(class_group(p1xp1()).rank == 2);
  auto built = build_family(FamilyParams{4, 2, 1, {0}});
  CHECK(class_group(built.fan).rank == 3);
}

TEST_CASE("family ray class table matches its closed form") {
  FamilyParams params{4, 2, 3, {2}};
  auto ctx = make_family_context(params);
  const int nr = params.n - params.r;
  using V = std::vector<std::int64_t>;
  for (int i = 0; i < nr; ++i)
    CHECK(ctx.tyv[static_cast<size_t>(i)] == V{0, 0, 1});  // D_v
  CHECK(ctx.tyv[static_cast<size_t>(nr)] == V{0, 1, 0});   // D_y
  CHECK(ctx.tyv[static_cast<size_t>(nr + 1)] == V{1, 1, 3});  // D_z1
  CHECK(ctx.tyv[static_cast<size_t>(nr + 2)] == V{1, 1, 1});  // D_z2, c=2
  CHECK(ctx.tyv[static_cast<size_t>(nr + 3)] == V{1, 0, 0});  // D_t
  CHECK(ctx.tyv[static_cast<size_t>(nr + 4)] == V{0, -1, 1});  // D_u
  // divisor_from_tyv inverts classify_tyv
  V cls{2, -1, 4};
  CHECK(ctx.classify_tyv(ctx.divisor_from_tyv(cls)) == cls);
}

TEST_CASE("smith normal form divisors") {
  MatI m(2, 2);
  m(0, 0) = 2;
  m(0, 1) = 4;
  m(1, 0) = 6;
  m(1, 1) = 8;
  auto s = smith_normal_form(m);
  CHECK(s.rank == 2);
  CHECK(s.divisors == std::vector<BigInt>{2, 4});

  MatI id = MatI::identity(3);
  auto si = smith_normal_form(id);
  CHECK(si.divisors == std::vector<BigInt>{1, 1, 1});

  MatI z(2, 3);  // zero matrix
  CHECK(smith_normal_form(z).rank == 0);
}

TEST_CASE("smith transforms are unimodular and consistent") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-4, 4);
  for (int trial = 0; trial < 25; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 4);
    const int cols = 1 + static_cast<int>(rng() % 4);
    MatI m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = dist(rng);
    auto s = smith_normal_form(m, true);
    REQUIRE(s.with_transforms);
    // u * u_inv == identity
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < rows; ++j) {
        BigInt sum = 0;
        for (int k = 0; k < rows; ++k) sum += s.u(i, k) * s.u_inv(k, j);
        CHECK(sum == BigInt(i == j ? 1 : 0));
      }
    // divisors form a chain
    for (size_t i = 1; i < s.divisors.size(); ++i)
      CHECK(s.divisors[i] % s.divisors[i - 1] == BigInt(0));
  }
}

TEST_CASE("determinant and unimodular inverse") {
  MatI m(2, 2);
  m(0, 0) = 3;
  m(0, 1) = 1;
  m(1, 0) = 5;
  m(1, 1) = 2;
  CHECK(determinant(m) == BigInt(1));
  auto inv = inverse_unimodular(m);
  CHECK(inv(0, 0) == 2);
  CHECK(inv(0, 1) == -1);
  CHECK(inv(1, 0) == -5);
  CHECK(inv(1, 1) == 3);

  MatI bad(2, 2);
  bad(0, 0) = 2;
  bad(1, 1) = 1;
  CHECK(determinant(bad) == BigInt(2));
  CHECK_THROWS_AS(inverse_unimodular(bad), Error);
}

TEST_CASE("determinant of larger random matrices via row expansion") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    MatI m(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = dist(rng);
    // expansion along the first row as an independent oracle
    std::function<BigInt(std::vector<std::vector<std::int64_t>>)> det =
        [&](std::vector<std::vector<std::int64_t>> a) -> BigInt {
      const size_t n = a.size();
      if (n == 1) return a[0][0];
      BigInt sum = 0;
      for (size_t c = 0; c < n; ++c) {
        std::vector<std::vector<std::int64_t>> minor;
        for (size_t i = 1; i < n; ++i) {
          std::vector<std::int64_t> row;
          for (size_t j = 0; j < n; ++j)
            if (j != c) row.push_back(a[i][j]);
          minor.push_back(row);
        }
        BigInt term = BigInt(a[0][c]) * det(minor);
        sum += (c % 2 == 0) ? term : -term;
      }
      return sum;
    };
    std::vector<std::vector<std::int64_t>> rows(4,
                                                std::vector<std::int64_t>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) rows[static_cast<size_t>(i)]
                                      [static_cast<size_t>(j)] = m(i, j);
    CHECK(determinant(m) == det(rows));
  }
}

TEST_CASE("ray class table in an explicit basis") {
  // For the projective plane every ray divisor has class 1 in the basis of
  // any single ray divisor.
  auto table = ray_class_table(p2(), {0});
  REQUIRE(table.size() == 3);
  for (const auto& row : table) CHECK(row == std::vector<std::int64_t>{1});
  // Product of lines: basis (ray0, ray2) gives rows (1,0),(1,0),(0,1),(0,1).
  auto t2 = ray_class_table(p1xp1(), {0, 2});
  CHECK(t2[0] == std::vector<std::int64_t>{1, 0});
  CHECK(t2[1] == std::vector<std::int64_t>{1, 0});
  CHECK(t2[2] == std::vector<std::int64_t>{0, 1});
  CHECK(t2[3] == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("ray count guard") {
  PentagonParams params;
  params.p = {10, 10, 10, 10, 10};
  params.c = std::vector<std::int64_t>(9, 0);
  params.b = std::vector<std::int64_t>(10, 0);
  // 50 rays is far beyond the subset-enumeration bound
  auto built = build_batyrev(params);
  CHECK_THROWS_AS(primitive_collections(built.fan), Error);
}
