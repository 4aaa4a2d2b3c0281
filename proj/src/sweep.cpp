#include "toric/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "toric/common.hpp"

namespace toric {

namespace {

std::array<std::int64_t, 2> range_from(const OJson& j, const char* what) {
  if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    return {v, v};
  }
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() &&
      j[1].is_number_integer()) {
    std::array<std::int64_t, 2> r{j[0].get<std::int64_t>(),
                                  j[1].get<std::int64_t>()};
    if (r[0] > r[1])
      throw Error(std::string("sweep config: empty range for ") + what);
    return r;
  }
  throw Error(std::string("sweep config: ") + what +
              " must be an integer or [lo, hi]");
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

const std::set<std::string> kKnownChecks = {
    "rank", "strongly_exceptional", "diff_acyclic", "thomsen_vs_bondal",
    "koszul"};

}  // namespace

SweepResult run_sweep(const OJson& config) {
  if (!config.is_object()) throw Error("sweep config: expected a JSON object");
  static const std::set<std::string> kKnownKeys = {
      "n", "r", "b", "c", "checks", "m", "window", "jobs", "out"};
  for (const auto& item : config.items())
    if (!kKnownKeys.count(item.key()))
      throw Error("sweep config: unknown key \"" + item.key() + "\"");
  const auto t0 = std::chrono::steady_clock::now();

  auto nr = range_from(config.contains("n") ? config.at("n") : OJson(),
                       "n");
  auto rr = range_from(config.contains("r") ? config.at("r") : OJson(),
                       "r");
  auto br = config.contains("b") ? range_from(config.at("b"), "b")
                                 : std::array<std::int64_t, 2>{0, 0};
  auto cr = config.contains("c") ? range_from(config.at("c"), "c")
                                 : std::array<std::int64_t, 2>{0, 0};
  if (nr[0] < 2) throw Error("sweep config: n must be at least 2");
  if (rr[0] < 1) throw Error("sweep config: r must be at least 1");
  if (br[0] < 0 || cr[0] < 0)
    throw Error("sweep config: b and c must be nonnegative");

  if (!config.contains("checks") || !config.at("checks").is_array() ||
      config.at("checks").empty())
    throw Error("sweep config: checks must be a nonempty list");
  std::vector<std::string> checks;
  for (const auto& c : config.at("checks")) {
    if (!c.is_string())
      throw Error("sweep config: check names must be strings");
    std::string name = c.get<std::string>();
    if (!kKnownChecks.count(name))
      throw Error("sweep config: unknown check \"" + name + "\"");
    checks.push_back(name);
  }

  std::vector<std::int64_t> ms = {2, 3};
  if (config.contains("m")) {
    ms.clear();
    const auto& mj = config.at("m");
    if (mj.is_number_integer())
      ms.push_back(mj.get<std::int64_t>());
    else if (mj.is_array())
      for (const auto& e : mj) ms.push_back(e.get<std::int64_t>());
    else
      throw Error("sweep config: m must be an integer or a list");
    for (auto m : ms)
      if (m < 1) throw Error("sweep config: m must be positive");
    if (ms.empty()) throw Error("sweep config: m list is empty");
  }
  std::int64_t window = 3;
  if (config.contains("window")) {
    window = config.at("window").get<std::int64_t>();
    if (window < 0) throw Error("sweep config: window must be nonnegative");
  }
  std::int64_t jobs = 1;
  if (config.contains("jobs")) {
    jobs = config.at("jobs").get<std::int64_t>();
    if (jobs < 1) throw Error("sweep config: jobs must be positive");
  }
  std::string out_dir =
      config.contains("out") ? config.at("out").get<std::string>() : "";

  // Canonical config echo: fixed key order, ranges normalized to arrays.
  OJson canon;
  canon["n"] = OJson::array({nr[0], nr[1]});
  canon["r"] = OJson::array({rr[0], rr[1]});
  canon["b"] = OJson::array({br[0], br[1]});
  canon["c"] = OJson::array({cr[0], cr[1]});
  canon["m"] = ms;
  canon["window"] = window;
  canon["checks"] = checks;
  canon["jobs"] = jobs;
  if (!out_dir.empty()) canon["out"] = out_dir;

  char hash_hex[32];
  std::snprintf(hash_hex, sizeof hash_hex, "%016llx",
                static_cast<unsigned long long>(fnv1a(canon.dump())));

  SweepResult result;
  OJson points = OJson::array();

  auto run_point = [&](const FamilyParams& params) {
    OJson point;
    point["n"] = params.n;
    point["r"] = params.r;
    point["b"] = params.b;
    point["c"] = params.c;
    OJson outcomes;
    bool point_pass = true;

    FamilyContext ctx = make_family_context(params);
    OrderedCollection coll = build_col(params);
    for (const auto& name : checks) {
      bool ok = false;
      if (name == "rank") {
        const std::int64_t cones = family_max_cone_count(params.n, params.r);
        ok = ctx.cls.rank == 3 &&
             static_cast<std::int64_t>(coll.elements.size()) == cones &&
             static_cast<std::int64_t>(ctx.built.fan.max_cones.size()) ==
                 cones;
      } else if (name == "strongly_exceptional") {
        ok = verify_strongly_exceptional(ctx, coll).pass;
      } else if (name == "diff_acyclic") {
        ok = true;
        for (const auto& d : build_diff(params).all)
          if (!is_acyclic_family(ctx, {d[0], d[1], d[2]})) {
            ok = false;
            break;
          }
      } else if (name == "thomsen_vs_bondal") {
        ok = true;
        Divisor zero(ctx.built.fan.rays.size(), 0);
        for (auto m : ms) {
          auto t = thomsen_split(ctx.built.fan, ctx.cls, zero, m);
          auto b = bondal_split(ctx.built.fan, ctx.cls, zero, m);
          if (t.classes != b.classes) {
            ok = false;
            break;
          }
        }
      } else if (name == "koszul") {
        ok = koszul_generation_check(params, coll, window).all_covered;
      }
      outcomes[name] = ok;
      if (!ok) point_pass = false;
    }
    point["checks"] = outcomes;
    point["pass"] = point_pass;
    if (!point_pass) ++result.failures;
    points.push_back(point);
  };

  std::int64_t point_count = 0;
  for (std::int64_t n = nr[0]; n <= nr[1]; ++n)
    for (std::int64_t r = rr[0]; r <= rr[1] && r < n; ++r)
      for (std::int64_t b = br[0]; b <= br[1]; ++b) {
        // odometer over the r-1 twist coordinates
        std::vector<std::int64_t> c(static_cast<std::size_t>(r - 1), cr[0]);
        while (true) {
          FamilyParams params{static_cast<int>(n), static_cast<int>(r), b, c};
          run_point(params);
          ++point_count;
          std::size_t i = 0;
          for (; i < c.size(); ++i) {
            if (c[i] < cr[1]) {
              ++c[i];
              std::fill(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i),
                        cr[0]);
              break;
            }
          }
          if (i == c.size()) break;
        }
      }
  if (point_count == 0) throw Error("sweep config: grid is empty");

  result.report["version"] = kVersion;
  result.report["config_hash"] = hash_hex;
  result.report["config"] = canon;
  result.report["points"] = points;
  result.report["point_count"] = point_count;
  result.report["failures"] = result.failures;
  result.report["pass"] = result.failures == 0;

  const auto t1 = std::chrono::steady_clock::now();
  const double secs =
      std::chrono::duration<double>(t1 - t0).count();
  std::fprintf(stderr, "sweep: %lld points, %lld failures, %.2fs\n",
               static_cast<long long>(point_count),
               static_cast<long long>(result.failures), secs);

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::ofstream out(std::filesystem::path(out_dir) / "sweep.json");
    if (!out) throw Error("sweep: cannot write report to " + out_dir);
    out << result.report.dump(2) << "\n";
  }
  return result;
}

}  // namespace toric
