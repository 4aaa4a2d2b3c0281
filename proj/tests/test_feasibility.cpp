#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "toric/feasibility.hpp"

using namespace toric;

namespace {

bool satisfies(const IneqSystem& sys, const std::vector<std::int64_t>& x) {
  for (size_t row = 0; row < sys.coeffs.size(); ++row) {
    std::int64_t lhs = sys.constants[row];
    for (int v = 0; v < sys.vars; ++v)
      lhs += sys.coeffs[row][static_cast<size_t>(v)] * x[static_cast<size_t>(v)];
    if (lhs < 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("feasible bounded system returns a valid witness") {
  IneqSystem sys(2);
  sys.add_ge({1, 0}, 0);
  sys.add_ge({0, 1}, 0);
  sys.add_le({1, 1}, 3);
  auto f = integer_feasibility(sys);
  REQUIRE(f.feasible);
  CHECK(satisfies(sys, f.witness));
  CHECK(rational_bounded(sys));
}

TEST_CASE("contradictory bounds are infeasible") {
  IneqSystem sys(1);
  sys.add_ge({1}, 1);
  sys.add_le({1}, 0);
  CHECK_FALSE(integer_feasibility(sys).feasible);
}

TEST_CASE("integer gaps are detected") {
  // 2x == 1 has rational but no integer solutions
  IneqSystem sys(1);
  sys.add_eq({2}, 1);
  CHECK_FALSE(integer_feasibility(sys).feasible);
  // 4 <= 2x <= 5 forces x = 2
  IneqSystem sys2(1);
  sys2.add_ge({2}, 4);
  sys2.add_le({2}, 5);
  auto f = integer_feasibility(sys2);
  REQUIRE(f.feasible);
  CHECK(f.witness == std::vector<std::int64_t>{2});
}

TEST_CASE("gcd tightening finds hidden infeasibility") {
  // 3x + 6y == 2 is unsolvable mod 3 even though rationally fine
  IneqSystem sys(2);
  sys.add_eq({3, 6}, 2);
  sys.add_ge({1, 0}, -100);
  sys.add_le({1, 0}, 100);
  sys.add_ge({0, 1}, -100);
  sys.add_le({0, 1}, 100);
  CHECK_FALSE(integer_feasibility(sys).feasible);
}

TEST_CASE("unbounded feasible system still yields a witness") {
  IneqSystem sys(2);
  sys.add_ge({1, 0}, 5);
  sys.add_ge({0, 1}, -2);
  CHECK_FALSE(rational_bounded(sys));
  auto f = integer_feasibility(sys);
  REQUIRE(f.feasible);
  CHECK(satisfies(sys, f.witness));
}

TEST_CASE("rectangle point count") {
  IneqSystem sys(2);
  sys.add_ge({1, 0}, 0);
  sys.add_le({1, 0}, 3);
  sys.add_ge({0, 1}, 0);
  sys.add_le({0, 1}, 2);
  CHECK(lattice_point_count(sys) == BigInt(12));
  std::set<std::vector<std::int64_t>> seen;
  lattice_points(sys, [&](const std::vector<std::int64_t>& x) {
    CHECK(satisfies(sys, x));
    seen.insert(x);
  });
  CHECK(seen.size() == 12);
}

TEST_CASE("triangle point counts follow the binomial formula") {
  for (std::int64_t n : {0, 1, 2, 5, 9}) {
    IneqSystem sys(2);
    sys.add_ge({1, 0}, 0);
    sys.add_ge({0, 1}, 0);
    sys.add_le({1, 1}, n);
    CAPTURE(n);
    CHECK(lattice_point_count(sys) == BigInt((n + 1) * (n + 2) / 2));
  }
}

TEST_CASE("equality slices count correctly") {
  // 2x + 3y == 12, x,y >= 0: (0,4), (3,2), (6,0)
  IneqSystem sys(2);
  sys.add_eq({2, 3}, 12);
  sys.add_ge({1, 0}, 0);
  sys.add_ge({0, 1}, 0);
  CHECK(lattice_point_count(sys) == BigInt(3));
}

TEST_CASE("empty solution set counts zero") {
  IneqSystem sys(1);
  sys.add_ge({1}, 4);
  sys.add_le({1}, 3);
  CHECK(lattice_point_count(sys) == BigInt(0));
}

TEST_CASE("three dimensional simplex count") {
  IneqSystem sys(3);
  for (int v = 0; v < 3; ++v) {
    std::vector<std::int64_t> c(3, 0);
    c[static_cast<size_t>(v)] = 1;
    sys.add_ge(c, 0);
  }
  sys.add_le({1, 1, 1}, 4);
  // tetrahedral number: C(4+3,3) = 35
  CHECK(lattice_point_count(sys) == BigInt(35));
}

TEST_CASE("redundant constraints do not change the answer") {
  IneqSystem sys(2);
  sys.add_ge({1, 0}, 0);
  sys.add_le({1, 0}, 2);
  sys.add_ge({0, 1}, 0);
  sys.add_le({0, 1}, 2);
  sys.add_le({1, 1}, 10);   // redundant
  sys.add_ge({1, 1}, -10);  // redundant
  CHECK(lattice_point_count(sys) == BigInt(9));
}

TEST_CASE("scaled rows behave like their reduced forms") {
  IneqSystem a(2), b(2);
  a.add_ge({2, 4}, 6);
  b.add_ge({1, 2}, 3);
  for (auto* sys : {&a, &b}) {
    sys->add_ge({1, 0}, 0);
    sys->add_le({1, 0}, 5);
    sys->add_ge({0, 1}, 0);
    sys->add_le({0, 1}, 5);
  }
  CHECK(lattice_point_count(a) == lattice_point_count(b));
}

TEST_CASE("lattice point count requires a bounded system") {
  IneqSystem sys(2);
  sys.add_ge({1, 0}, 0);
  sys.add_ge({0, 1}, 0);
  CHECK_FALSE(rational_bounded(sys));
  CHECK_THROWS_AS(lattice_point_count(sys), Error);
}

TEST_CASE("degenerate equality-only system") {
  IneqSystem sys(2);
  sys.add_eq({1, 0}, 7);
  sys.add_eq({0, 1}, -3);
  auto f = integer_feasibility(sys);
  REQUIRE(f.feasible);
  CHECK(f.witness == std::vector<std::int64_t>{7, -3});
  CHECK(lattice_point_count(sys) == BigInt(1));
}
