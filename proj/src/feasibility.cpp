#include "toric/feasibility.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "toric/common.hpp"

namespace toric {

namespace {

constexpr std::size_t kMaxRowsPerLevel = 200000;
constexpr std::uint64_t kMaxSearchSteps = 10'000'000;
constexpr std::uint64_t kMaxEnumSteps = 50'000'000;
constexpr std::int64_t kMaxShell = 4096;
constexpr std::int64_t kMaxInput = 1ll << 62;

template <class T>
T ceil_div_t(const T& a, const T& b) {
  return -floor_div(T(-a), b);
}

template <class T>
struct Row {
  std::vector<T> c;
  T d{0};
};

enum class RowKind { kKeep, kTautology, kContradiction };

// gcd-normalize; for integer x, (c/g).x >= ceil(-d/g) i.e. constant becomes
// floor(d/g).
template <class T>
RowKind normalize_row(Row<T>& r) {
  T g{0};
  bool allzero = true;
  for (const T& x : r.c) {
    if (!(x == T(0))) allzero = false;
    g = gcd_val(g, x);
  }
  if (allzero)
    return r.d < T(0) ? RowKind::kContradiction : RowKind::kTautology;
  if (!(g == T(1))) {
    for (T& x : r.c) x = x / g;
    r.d = floor_div(r.d, g);
  }
  return RowKind::kKeep;
}

// levels[k]: rows whose highest-index nonzero coefficient is k (after the
// variables above k have been eliminated); they bound x_k once x_0..x_{k-1}
// are fixed.
template <class T>
struct Elim {
  int vars = 0;
  std::vector<std::vector<Row<T>>> levels;
  bool contradiction = false;
};

template <class T>
Elim<T> eliminate(const IneqSystem& sys) {
  Elim<T> e;
  e.vars = sys.vars;
  e.levels.assign(static_cast<std::size_t>(std::max(sys.vars, 0)), {});
  std::vector<Row<T>> live;
  for (std::size_t i = 0; i < sys.coeffs.size(); ++i) {
    Row<T> r;
    r.c.reserve(sys.vars);
    for (std::int64_t v : sys.coeffs[i]) r.c.push_back(T(v));
    r.d = T(sys.constants[i]);
    switch (normalize_row(r)) {
      case RowKind::kContradiction:
        e.contradiction = true;
        return e;
      case RowKind::kTautology:
        break;
      case RowKind::kKeep:
        live.push_back(std::move(r));
        break;
    }
  }
  for (int k = sys.vars - 1; k >= 0; --k) {
    std::vector<Row<T>> lowers, uppers;
    std::map<std::vector<T>, T> best;  // pass-through rows and combinations
    auto add_row = [&](Row<T> r) {
      switch (normalize_row(r)) {
        case RowKind::kContradiction:
          e.contradiction = true;
          return;
        case RowKind::kTautology:
          return;
        case RowKind::kKeep:
          break;
      }
      auto it = best.find(r.c);
      if (it == best.end())
        best.emplace(std::move(r.c), r.d);
      else if (r.d < it->second)
        it->second = r.d;  // smaller constant is the stronger row
    };
    for (auto& r : live) {
      if (r.c[k] > T(0))
        lowers.push_back(std::move(r));
      else if (r.c[k] < T(0))
        uppers.push_back(std::move(r));
      else
        add_row(std::move(r));
      if (e.contradiction) return e;
    }
    for (const Row<T>& lo : lowers)
      for (const Row<T>& up : uppers) {
        const T a = lo.c[k];   // > 0
        const T b = -up.c[k];  // > 0
        Row<T> nr;
        nr.c.assign(sys.vars, T(0));
        for (int j = 0; j < k; ++j) nr.c[j] = b * lo.c[j] + a * up.c[j];
        nr.d = b * lo.d + a * up.d;
        add_row(std::move(nr));
        if (e.contradiction) return e;
        if (best.size() > kMaxRowsPerLevel)
          throw Error("feasibility: elimination exceeded size budget");
      }
    e.levels[k] = std::move(lowers);
    for (auto& r : uppers) e.levels[k].push_back(std::move(r));
    live.clear();
    for (auto& [c, d] : best) live.push_back(Row<T>{c, d});
  }
  return e;
}

// Depth-first back-substitution over the stored elimination levels.  With
// clip > 0 every coordinate is additionally restricted to [-clip, clip].
// The visitor returns false to stop the walk early.
template <class T>
bool dfs_walk(const Elim<T>& e, int k, std::vector<T>& x, std::int64_t clip,
              std::uint64_t& steps, std::uint64_t max_steps,
              const std::function<bool(const std::vector<T>&)>& visit) {
  if (k == e.vars) return visit(x);
  std::optional<T> lo, hi;
  for (const Row<T>& r : e.levels[k]) {
    T partial = r.d;
    for (int j = 0; j < k; ++j) partial += r.c[j] * x[j];
    if (r.c[k] > T(0)) {
      T bound = ceil_div_t(T(-partial), r.c[k]);
      if (!lo || bound > *lo) lo = bound;
    } else {
      T bound = floor_div(partial, T(-r.c[k]));
      if (!hi || bound < *hi) hi = bound;
    }
  }
  if (clip > 0) {
    T c(clip);
    if (!lo || *lo < -c) lo = -c;
    if (!hi || *hi > c) hi = c;
  }
  if (!lo || !hi)
    throw Error("feasibility: enumeration hit an unbounded level");
  for (T v = *lo; !(v > *hi); v += T(1)) {
    if (++steps > max_steps)
      throw Error("feasibility: enumeration budget exceeded");
    x[k] = v;
    if (!dfs_walk(e, k + 1, x, clip, steps, max_steps, visit)) return false;
  }
  return true;
}

void validate(const IneqSystem& sys) {
  if (sys.vars < 0) throw Error("feasibility: negative variable count");
  if (sys.coeffs.size() != sys.constants.size())
    throw Error("feasibility: malformed system");
  for (const auto& c : sys.coeffs) {
    if (static_cast<int>(c.size()) != sys.vars)
      throw Error("feasibility: row arity mismatch");
    for (std::int64_t v : c)
      if (v <= -kMaxInput || v >= kMaxInput)
        throw Error("feasibility: coefficient too large");
  }
  for (std::int64_t d : sys.constants)
    if (d <= -kMaxInput || d >= kMaxInput)
      throw Error("feasibility: constant too large");
}

template <class T>
std::vector<std::int64_t> to_int64_vec(const std::vector<T>& x) {
  std::vector<std::int64_t> out;
  out.reserve(x.size());
  for (const T& v : x) out.push_back(to_int64(v));
  return out;
}

template <class T>
Feasibility search_first(const Elim<T>& e, std::int64_t clip) {
  Feasibility out;
  std::vector<T> x(e.vars, T(0));
  std::uint64_t steps = 0;
  dfs_walk<T>(e, 0, x, clip, steps, kMaxSearchSteps,
              [&](const std::vector<T>& point) {
                out.feasible = true;
                out.witness = to_int64_vec(point);
                return false;
              });
  return out;
}

}  // namespace

void IneqSystem::add_ge(std::vector<std::int64_t> c, std::int64_t rhs) {
  if (static_cast<int>(c.size()) != vars)
    throw Error("feasibility: row arity mismatch");
  coeffs.push_back(std::move(c));
  constants.push_back(-rhs);
}

void IneqSystem::add_le(std::vector<std::int64_t> c, std::int64_t rhs) {
  for (std::int64_t& v : c) v = -v;
  add_ge(std::move(c), -rhs);
}

void IneqSystem::add_eq(std::vector<std::int64_t> c, std::int64_t rhs) {
  add_ge(c, rhs);
  add_le(std::move(c), rhs);
}

bool rational_bounded(const IneqSystem& sys) {
  validate(sys);
  for (int j = 0; j < sys.vars; ++j)
    for (int sigma : {1, -1}) {
      IneqSystem cone(sys.vars);
      for (const auto& c : sys.coeffs) cone.add_ge(c, 0);
      std::vector<std::int64_t> dir(sys.vars, 0);
      dir[j] = sigma;
      cone.add_ge(std::move(dir), 1);
      // For a cone system rational and integer feasibility coincide, and
      // Fourier-Motzkin elimination decides it exactly.
      const bool ray_exists = run_lanes([&](auto tag) {
        using T = std::decay_t<decltype(tag)>;
        return !eliminate<T>(cone).contradiction;
      });
      if (ray_exists) return false;
    }
  return true;
}

Feasibility integer_feasibility(const IneqSystem& sys) {
  validate(sys);
  const bool bounded = rational_bounded(sys);
  return run_lanes([&](auto tag) -> Feasibility {
    using T = std::decay_t<decltype(tag)>;
    Elim<T> e = eliminate<T>(sys);
    if (e.contradiction) return {};
    if (sys.vars == 0) return {true, {}};
    if (bounded) return search_first(e, 0);
    for (std::int64_t shell = 1; shell <= kMaxShell; shell *= 4) {
      Feasibility out = search_first(e, shell);
      if (out.feasible) return out;
    }
    throw Error(
        "integer feasibility undecided: unbounded region with no witness in "
        "the searched range");
  });
}

BigInt lattice_point_count(const IneqSystem& sys) {
  validate(sys);
  if (!rational_bounded(sys))
    throw Error("lattice point count requires a bounded system");
  return run_lanes([&](auto tag) -> BigInt {
    using T = std::decay_t<decltype(tag)>;
    Elim<T> e = eliminate<T>(sys);
    if (e.contradiction) return BigInt(0);
    BigInt count = 0;
    std::vector<T> x(e.vars, T(0));
    std::uint64_t steps = 0;
    dfs_walk<T>(e, 0, x, 0, steps, kMaxEnumSteps,
                [&](const std::vector<T>&) {
                  ++count;
                  return true;
                });
    return count;
  });
}

void lattice_points(
    const IneqSystem& sys,
    const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  validate(sys);
  if (!rational_bounded(sys))
    throw Error("lattice point enumeration requires a bounded system");
  // Collected inside the lane so an int64 overflow retried on the BigInt
  // lane cannot deliver a point twice.
  const auto points = run_lanes([&](auto tag) {
    using T = std::decay_t<decltype(tag)>;
    std::vector<std::vector<std::int64_t>> out;
    Elim<T> e = eliminate<T>(sys);
    if (e.contradiction) return out;
    std::vector<T> x(e.vars, T(0));
    std::uint64_t steps = 0;
    dfs_walk<T>(e, 0, x, 0, steps, kMaxEnumSteps,
                [&](const std::vector<T>& point) {
                  out.push_back(to_int64_vec(point));
                  return true;
                });
    return out;
  });
  for (const auto& p : points) fn(p);
}

}  // namespace toric
