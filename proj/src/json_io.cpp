#include "toric/json_io.hpp"

#include <fstream>
#include <limits>

#include "toric/common.hpp"

namespace toric {

namespace {

std::int64_t int_from(const OJson& j, const char* what) {
  if (!j.is_number_integer())
    throw Error(std::string(what) + ": expected an integer");
  return j.get<std::int64_t>();
}

const OJson& field(const OJson& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw Error(std::string(what) + ": missing field \"" + key + "\"");
  return j.at(key);
}

std::vector<std::vector<std::int64_t>> int_matrix_from(const OJson& j,
                                                       const char* what) {
  if (!j.is_array()) throw Error(std::string(what) + ": expected an array");
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& row : j) out.push_back(int_vector_from_json(row, what));
  return out;
}

template <typename T>
OJson triple_json(const std::array<T, 3>& a) {
  return OJson::array({a[0], a[1], a[2]});
}

}  // namespace

OJson load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  OJson j = OJson::parse(in, nullptr, false);
  if (j.is_discarded()) throw Error("invalid JSON in file: " + path);
  return j;
}

OJson bigint_to_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
  return v.str();
}

std::vector<std::int64_t> int_vector_from_json(const OJson& j,
                                               const char* what) {
  if (!j.is_array())
    throw Error(std::string(what) + ": expected an integer array");
  std::vector<std::int64_t> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(int_from(e, what));
  return out;
}

Fan fan_from_json(const OJson& j) {
  Fan fan;
  fan.dim = static_cast<int>(int_from(field(j, "dim", "fan"), "fan dim"));
  fan.rays = int_matrix_from(field(j, "rays", "fan"), "fan rays");
  for (const auto& cone : int_matrix_from(field(j, "max_cones", "fan"),
                                          "fan max_cones")) {
    std::vector<int> c;
    c.reserve(cone.size());
    for (auto v : cone) c.push_back(static_cast<int>(v));
    fan.max_cones.push_back(std::move(c));
  }
  return fan;
}

OJson fan_to_json(const Fan& fan) {
  OJson j;
  j["dim"] = fan.dim;
  j["rays"] = fan.rays;
  j["max_cones"] = fan.max_cones;
  return j;
}

bool looks_like_family_params(const OJson& j) {
  return j.is_object() && j.contains("n") && j.contains("r");
}

bool looks_like_pentagon_params(const OJson& j) {
  return j.is_object() && j.contains("p");
}

FamilyParams family_params_from_json(const OJson& j) {
  FamilyParams p;
  p.n = static_cast<int>(int_from(field(j, "n", "family params"), "n"));
  p.r = static_cast<int>(int_from(field(j, "r", "family params"), "r"));
  p.b = int_from(field(j, "b", "family params"), "b");
  if (j.contains("c")) p.c = int_vector_from_json(j.at("c"), "family c");
  return p;
}

PentagonParams pentagon_params_from_json(const OJson& j) {
  PentagonParams p;
  auto groups = int_vector_from_json(field(j, "p", "pentagon params"),
                                     "pentagon p");
  if (groups.size() != 5)
    throw Error("pentagon params: p must have five entries");
  for (int i = 0; i < 5; ++i) p.p[i] = static_cast<int>(groups[i]);
  if (j.contains("c")) p.c = int_vector_from_json(j.at("c"), "pentagon c");
  if (j.contains("b")) p.b = int_vector_from_json(j.at("b"), "pentagon b");
  return p;
}

PrimComplex complex_from_json(const OJson& j) {
  int vertices = static_cast<int>(
      int_from(field(j, "vertices", "complex"), "complex vertices"));
  std::vector<std::vector<int>> prims;
  for (const auto& row :
       int_matrix_from(field(j, "prims", "complex"), "complex prims")) {
    std::vector<int> p;
    for (auto v : row) p.push_back(static_cast<int>(v));
    prims.push_back(std::move(p));
  }
  return make_complex(vertices, prims);
}

OJson fan_check_to_json(const FanCheck& c) {
  OJson j;
  j["ok"] = c.ok();
  j["smooth"] = c.smooth;
  j["pseudo_manifold"] = c.pseudo_manifold;
  j["errors"] = c.errors;
  return j;
}

OJson homology_to_json(const HomologyResult& h) {
  OJson j;
  j["vertices"] = h.vertices;
  j["ranks"] = h.ranks;
  OJson tors = OJson::array();
  for (const auto& level : h.torsion) {
    OJson row = OJson::array();
    for (const auto& t : level) row.push_back(bigint_to_json(t));
    tors.push_back(row);
  }
  j["torsion"] = tors;
  j["acyclic"] = h.acyclic();
  return j;
}

OJson forbidden_to_json(const ForbiddenData& d) {
  OJson j;
  j["ray_count"] = d.ray_count;
  j["count"] = d.sets.size();
  OJson sets = OJson::array();
  OJson hom = OJson::array();
  for (std::size_t i = 0; i < d.sets.size(); ++i) {
    OJson members = OJson::array();
    for (int v = 0; v < d.ray_count; ++v)
      if (d.sets[i] & (1u << v)) members.push_back(v);
    sets.push_back(members);
    hom.push_back(homology_to_json(d.homology[i]));
  }
  j["sets"] = sets;
  j["homology"] = hom;
  return j;
}

OJson split_to_json(const SplitResult& s) {
  OJson arr = OJson::array();
  for (const auto& [cls, mult] : s.classes) {
    OJson e;
    e["class"] = cls;
    e["mult"] = mult;
    arr.push_back(e);
  }
  OJson j;
  j["total"] = s.total;
  j["summands"] = arr;
  return j;
}

OJson bondal_image_to_json(const BondalImage& img) {
  OJson j;
  j["classes"] = img.classes;
  j["count"] = img.classes.size();
  j["stabilized"] = img.stabilized;
  j["stabilized_at"] = img.stabilized_at;
  j["max_m"] = img.max_m;
  return j;
}

OJson ext_to_json(const ExtReport& e) {
  OJson j;
  j["hom_forward"] = bigint_to_json(e.hom_forward);
  j["higher_forward_vanish"] = e.higher_forward;
  j["hom_backward"] = bigint_to_json(e.hom_backward);
  return j;
}

OJson collection_to_json(const OrderedCollection& coll) {
  OJson arr = OJson::array();
  for (const auto& e : coll.elements) {
    OJson el;
    el["kind"] = e.prime ? "L'" : "L";
    el["s"] = e.s;
    el["q"] = e.q;
    el["class"] = triple_json(e.cls);
    arr.push_back(el);
  }
  OJson j;
  j["count"] = coll.elements.size();
  j["elements"] = arr;
  return j;
}

OJson diff_to_json(const DiffSet& d) {
  auto dump = [](const std::vector<std::array<std::int64_t, 3>>& v) {
    OJson arr = OJson::array();
    for (const auto& e : v) arr.push_back(triple_json(e));
    return arr;
  };
  OJson j;
  j["diff1"] = dump(d.diff1);
  j["diff2"] = dump(d.diff2);
  j["diff3"] = dump(d.diff3);
  j["all"] = dump(d.all);
  j["count"] = d.all.size();
  j["matches_pairwise"] = d.matches_pairwise;
  return j;
}

OJson exceptional_to_json(const ExceptionalReport& r) {
  OJson fails = OJson::array();
  for (const auto& f : r.failures) {
    OJson e;
    e["j"] = f.j;
    e["k"] = f.k;
    e["reason"] = f.reason;
    fails.push_back(e);
  }
  OJson j;
  j["pass"] = r.pass;
  j["structure_sheaf_ok"] = r.structure_sheaf_ok;
  j["pairs_checked"] = r.pairs_checked;
  j["failures"] = fails;
  return j;
}

OJson koszul_to_json(const KoszulReport& r) {
  OJson j;
  j["window"] = r.window;
  j["window_size"] = r.window_size;
  j["start_size"] = r.start_size;
  j["outside_window"] = r.outside_window;
  j["covered"] = r.covered;
  j["all_covered"] = r.all_covered;
  j["rules_exercised"] = r.rules_exercised;
  j["iterations"] = r.iterations;
  j["additions"] = r.additions;
  OJson unc = OJson::array();
  for (const auto& u : r.uncovered) unc.push_back(triple_json(u));
  j["uncovered_sample"] = unc;
  return j;
}

OJson counterexample_to_json(const CounterexampleReport& r) {
  OJson j;
  j["k"] = r.k;
  j["s_size"] = bigint_to_json(r.s_size);
  j["excluded_lower_bound"] = bigint_to_json(r.excluded_lower_bound);
  j["paper_excluded_bound"] = bigint_to_json(r.paper_excluded_bound);
  j["max_cones"] = bigint_to_json(r.max_cones);
  j["max_cones_formula"] = bigint_to_json(r.max_cones_formula);
  j["max_cones_match"] = r.max_cones_match;
  j["inequality_holds"] = r.inequality_holds;
  j["exact_inequality_holds"] = r.exact_inequality_holds;
  j["r_size"] = r.r_size;
  j["all_pairs_valid"] = r.all_pairs_valid;
  j["all_r_certified"] = r.all_r_certified;
  j["fan_validated"] = r.fan_validated;
  j["class_table_checked"] = r.class_table_checked;
  OJson samples = OJson::array();
  for (const auto& s : r.samples) {
    OJson e;
    e["p_plus"] = triple_json(s.p_plus);
    e["p_minus"] = triple_json(s.p_minus);
    e["diff"] = triple_json(s.diff);
    e["alpha"] = OJson::array(
        {s.alpha[0], s.alpha[1], s.alpha[2], s.alpha[3], s.alpha[4]});
    e["distinct"] = s.distinct;
    e["in_s"] = s.in_s;
    e["diff_in_r"] = s.diff_in_r;
    e["non_acyclic"] = s.non_acyclic;
    samples.push_back(e);
  }
  j["samples"] = samples;
  return j;
}

OJson bondal_box_to_json(const BondalBoxReport& r) {
  OJson j;
  j["k"] = r.k;
  j["z_range"] = OJson::array({r.z_range[0], r.z_range[1]});
  j["y_range"] = OJson::array({r.y_range[0], r.y_range[1]});
  j["u_range"] = OJson::array({r.u_range[0], r.u_range[1]});
  j["brute_computed"] = r.brute_computed;
  j["stabilized"] = r.stabilized;
  j["b_size"] = r.b_size;
  j["b_in_s"] = r.b_in_s;
  OJson viol = OJson::array();
  for (const auto& v : r.violations) viol.push_back(triple_json(v));
  j["violations"] = viol;
  return j;
}

OJson family_box_to_json(const FamilyBoxReport& r) {
  OJson j;
  j["n"] = r.n;
  j["r"] = r.r;
  j["b"] = r.b;
  j["c"] = r.c;
  j["cr_le_b"] = r.cr_le_b;
  j["contained"] = r.contained;
  j["contained_up_to_twist"] = r.contained_up_to_twist;
  j["twist"] = r.twist;
  return j;
}

}  // namespace toric
