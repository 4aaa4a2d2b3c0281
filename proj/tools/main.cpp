#include <cctype>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "toric/cohomology.hpp"
#include "toric/collections.hpp"
#include "toric/common.hpp"
#include "toric/frobenius.hpp"
#include "toric/json_io.hpp"
#include "toric/sweep.hpp"

namespace {

using namespace toric;

bool g_pretty = false;

void emit(const OJson& j, const std::string& summary = "") {
  std::cout << (g_pretty ? j.dump(2) : j.dump()) << "\n";
  if (g_pretty && !summary.empty()) std::cerr << summary << "\n";
}

void emit_to(const std::string& out_path, const OJson& j,
             const std::string& summary = "") {
  if (out_path.empty()) {
    emit(j, summary);
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot write file: " + out_path);
  out << j.dump(2) << "\n";
  if (g_pretty && !summary.empty()) std::cerr << summary << "\n";
}

/// A fan plus the family/pentagon structure when the input carried it.
struct Space {
  Fan fan;
  std::optional<FamilyContext> ctx;  // family-parameter inputs only
  std::optional<BuiltFan> built;     // family or pentagon inputs
};

Space load_space(const std::string& path) {
  OJson j = load_json_file(path);
  Space s;
  if (looks_like_family_params(j)) {
    s.ctx = make_family_context(family_params_from_json(j));
    s.built = s.ctx->built;
    s.fan = s.built->fan;
  } else if (looks_like_pentagon_params(j)) {
    s.built = build_batyrev(pentagon_params_from_json(j));
    s.fan = s.built->fan;
  } else {
    s.fan = fan_from_json(j);
    require_valid(s.fan);  // constructed fans are valid by construction
  }
  return s;
}

/// Bundles on the command line: inline JSON (array or {"t","y","v"} object)
/// or a path to a JSON file holding one.
OJson parse_bundle_text(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t");
  if (pos != std::string::npos) {
    const char c = text[pos];
    if (c == '[' || c == '{' || c == '-' || std::isdigit(
            static_cast<unsigned char>(c))) {
      OJson j = OJson::parse(text, nullptr, false);
      if (!j.is_discarded()) return j;
    }
  }
  return load_json_file(text);
}

Divisor resolve_divisor(const Space& s, const OJson& j) {
  const auto R = static_cast<std::int64_t>(s.fan.rays.size());
  if (j.is_object()) {
    if (!s.ctx)
      throw Error("a {\"t\",\"y\",\"v\"} class needs family-parameter input");
    std::vector<std::int64_t> tyv(3);
    for (int i = 0; const char* key : {"t", "y", "v"}) {
      if (!j.contains(key))
        throw Error(std::string("class object: missing \"") + key + "\"");
      tyv[i++] = j.at(key).get<std::int64_t>();
    }
    return s.ctx->divisor_from_tyv(tyv);
  }
  auto vec = int_vector_from_json(j, "bundle");
  if (static_cast<std::int64_t>(vec.size()) == R) return vec;  // divisor
  if (s.ctx && vec.size() == 3) return s.ctx->divisor_from_tyv(vec);
  if (!s.ctx) {
    auto cls = class_group(s.fan);
    if (static_cast<int>(vec.size()) == cls.rank)
      return cls.divisor_from_class(vec);
    throw Error("bundle: expected " + std::to_string(R) +
                " divisor coefficients or " + std::to_string(cls.rank) +
                " class coordinates");
  }
  throw Error("bundle: expected " + std::to_string(R) +
              " divisor coefficients or 3 class coordinates");
}

Col2Mode parse_col2_mode(const std::string& mode) {
  if (mode == "eq6") return Col2Mode::Eq6;
  if (mode == "thm") return Col2Mode::Thm;
  throw Error("--col2-mode must be eq6 or thm");
}

std::vector<std::vector<int>> space_prims(const Space& s) {
  if (s.built) return s.built->prims;
  return primitive_collections(s.fan);
}

ForbiddenData brute_forbidden(const Space& s) {
  // Forced subset enumeration (no pentagon shortcut), for cross-checking.
  const int R = static_cast<int>(s.fan.rays.size());
  auto prims = space_prims(s);
  ForbiddenData data;
  data.ray_count = R;
  data.dim = s.fan.dim;
  data.sets = non_acyclic_subsets(R, prims);
  PrimComplex full = make_complex(R, prims);
  for (auto mask : data.sets)
    data.homology.push_back(
        reduced_homology(induced_complex(R, full.prims, mask)));
  data.full = reduced_homology(full);
  return data;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for smooth complete toric varieties "
               "of Picard rank three"};
  app.require_subcommand(1);
  app.add_flag("--pretty", g_pretty,
               "indent JSON output and print a summary to stderr");
  int exit_code = 0;

  // ---- fan ----
  std::string fan_file;
  auto* fan_cmd = app.add_subcommand("fan", "validate a fan or list its "
                                            "primitive collections");
  fan_cmd->require_subcommand(1);
  auto* fan_validate = fan_cmd->add_subcommand("validate",
                                               "smoothness and completeness "
                                               "checks");
  fan_validate->add_option("file", fan_file, "fan JSON")->required();
  fan_validate->callback([&] {
    auto check = validate_fan(fan_from_json(load_json_file(fan_file)));
    emit(fan_check_to_json(check),
         check.ok() ? "fan: ok" : "fan: INVALID");
    if (!check.ok()) exit_code = 1;
  });
  auto* fan_prims = fan_cmd->add_subcommand("prims",
                                            "minimal non-faces of the fan");
  fan_prims->add_option("file", fan_file, "fan JSON")->required();
  fan_prims->callback([&] {
    auto fan = fan_from_json(load_json_file(fan_file));
    require_valid(fan);
    auto prims = primitive_collections(fan);
    OJson j;
    j["count"] = prims.size();
    j["prims"] = prims;
    emit(j, "prims: " + std::to_string(prims.size()));
  });

  // ---- build ----
  std::string build_file, build_out;
  bool build_full = false;
  auto* build_cmd = app.add_subcommand("build", "construct a fan from "
                                                "parameters");
  build_cmd->require_subcommand(1);
  auto add_build = [&](const char* name, const char* help, bool family) {
    auto* sub = build_cmd->add_subcommand(name, help);
    sub->add_option("file", build_file, "parameter JSON")->required();
    sub->add_option("-o,--out", build_out, "write the fan JSON here");
    sub->add_flag("--full", build_full,
                  "include ray groups and primitive collections");
    sub->callback([&, family] {
      OJson j = load_json_file(build_file);
      BuiltFan built = family
                           ? build_family(family_params_from_json(j))
                           : build_batyrev(pentagon_params_from_json(j));
      OJson out = fan_to_json(built.fan);
      if (build_full) {
        out["groups"] = built.groups;
        out["prims"] = built.prims;
      }
      emit_to(build_out, out,
              "fan: " + std::to_string(built.fan.rays.size()) + " rays, " +
                  std::to_string(built.fan.max_cones.size()) + " max cones");
    });
  };
  add_build("family", "one-parameter family fan from {n, r, b, c}", true);
  add_build("batyrev", "pentagon fan from {p, c, b}", false);

  // ---- homology ----
  std::string hom_file;
  auto* hom_cmd = app.add_subcommand("homology", "reduced homology of a "
                                                 "prim complex");
  hom_cmd->add_option("file", hom_file, "complex JSON {vertices, prims}")
      ->required();
  hom_cmd->callback([&] {
    auto c = complex_from_json(load_json_file(hom_file));
    auto h = reduced_homology(c);
    emit(homology_to_json(h), h.acyclic() ? "acyclic" : "non-acyclic");
  });

  // ---- forbidden ----
  std::string forb_file;
  bool forb_closed = false, forb_brute = false;
  auto* forb_cmd = app.add_subcommand("forbidden",
                                      "ray subsets with nonvanishing "
                                      "reduced homology");
  forb_cmd->add_option("file", forb_file, "fan or parameter JSON")
      ->required();
  forb_cmd->add_flag("--closed-form", forb_closed,
                     "require the pentagon closed form");
  forb_cmd->add_flag("--brute", forb_brute,
                     "force subset enumeration (no pentagon shortcut)");
  forb_cmd->callback([&] {
    if (forb_closed && forb_brute)
      throw Error("--closed-form and --brute are mutually exclusive");
    Space s = load_space(forb_file);
    ForbiddenData data;
    if (forb_brute) {
      data = brute_forbidden(s);
    } else {
      auto prims = space_prims(s);
      if (forb_closed &&
          !detect_pentagon(static_cast<int>(s.fan.rays.size()), prims))
        throw Error("--closed-form: primitive collections are not a "
                    "pentagon");
      data = forbidden_data(s.fan, prims);
    }
    emit(forbidden_to_json(data),
         "forbidden sets: " + std::to_string(data.sets.size()));
  });

  // ---- acyclic ----
  std::string acy_file, acy_bundle;
  auto* acy_cmd = app.add_subcommand("acyclic",
                                     "does all higher cohomology vanish?");
  acy_cmd->add_option("file", acy_file, "fan or parameter JSON")->required();
  acy_cmd->add_option("bundle", acy_bundle,
                      "divisor/class JSON (inline or file)")
      ->required();
  acy_cmd->callback([&] {
    Space s = load_space(acy_file);
    OJson bj = parse_bundle_text(acy_bundle);
    OJson j;
    bool acyclic;
    if (s.ctx && (bj.is_object() || (bj.is_array() && bj.size() == 3))) {
      std::vector<std::int64_t> tyv;
      if (bj.is_object()) {
        for (const char* key : {"t", "y", "v"})
          tyv.push_back(bj.at(key).get<std::int64_t>());
      } else {
        tyv = int_vector_from_json(bj, "class");
      }
      acyclic = is_acyclic_family(*s.ctx, tyv);
      j["method"] = "sign_patterns";
    } else {
      acyclic = is_acyclic(s.fan, resolve_divisor(s, bj));
      j["method"] = "forbidden_sets";
    }
    j["acyclic"] = acyclic;
    emit(j, acyclic ? "acyclic" : "non-acyclic");
  });

  // ---- cohom ----
  std::string coh_file, coh_bundle;
  auto* coh_cmd = app.add_subcommand("cohom", "cohomology dimension table");
  coh_cmd->add_option("file", coh_file, "fan or parameter JSON")->required();
  coh_cmd->add_option("bundle", coh_bundle,
                      "divisor/class JSON (inline or file)")
      ->required();
  coh_cmd->callback([&] {
    Space s = load_space(coh_file);
    auto dims = cohomology_dims(s.fan,
                                resolve_divisor(s, parse_bundle_text(
                                                       coh_bundle)));
    OJson j;
    OJson h = OJson::array();
    for (const auto& d : dims) h.push_back(bigint_to_json(d));
    j["h"] = h;
    emit(j);
  });

  // ---- ext ----
  std::string ext_file, ext_b1, ext_b2;
  auto* ext_cmd = app.add_subcommand("ext",
                                     "Hom/Ext vanishing data for a pair");
  ext_cmd->add_option("file", ext_file, "fan or parameter JSON")->required();
  ext_cmd->add_option("first", ext_b1, "first bundle")->required();
  ext_cmd->add_option("second", ext_b2, "second bundle")->required();
  ext_cmd->callback([&] {
    Space s = load_space(ext_file);
    auto rep = ext_vanishing(s.fan,
                             resolve_divisor(s, parse_bundle_text(ext_b1)),
                             resolve_divisor(s, parse_bundle_text(ext_b2)));
    emit(ext_to_json(rep));
  });

  // ---- frobenius ----
  std::string fro_file, fro_div, fro_method = "thomsen";
  std::int64_t fro_m = 2;
  int fro_anchor = 0;
  auto* fro_cmd = app.add_subcommand("frobenius",
                                     "push-forward splitting of a line "
                                     "bundle");
  fro_cmd->add_option("file", fro_file, "fan or parameter JSON")->required();
  fro_cmd->add_option("-m", fro_m, "push-forward order")->required();
  fro_cmd->add_option("--divisor", fro_div, "bundle (default: the zero "
                                            "divisor)");
  fro_cmd->add_option("--method", fro_method, "thomsen | bondal | both")
      ->check(CLI::IsMember({"thomsen", "bondal", "both"}));
  fro_cmd->add_option("--anchor", fro_anchor,
                      "anchor cone for the division method");
  fro_cmd->callback([&] {
    Space s = load_space(fro_file);
    auto cls = class_group(s.fan);
    Divisor div(s.fan.rays.size(), 0);
    if (!fro_div.empty())
      div = resolve_divisor(s, parse_bundle_text(fro_div));
    OJson j;
    if (fro_method == "thomsen" || fro_method == "both")
      j["thomsen"] = split_to_json(
          thomsen_split(s.fan, cls, div, fro_m, fro_anchor));
    if (fro_method == "bondal" || fro_method == "both")
      j["bondal"] = split_to_json(bondal_split(s.fan, cls, div, fro_m));
    if (fro_method == "both") {
      bool equal = j["thomsen"] == j["bondal"];
      j["equal"] = equal;
      if (!equal) exit_code = 1;
      emit(j, equal ? "split methods agree" : "SPLIT METHODS DISAGREE");
    } else {
      emit(j);
    }
  });

  // ---- bondal-image / bprime ----
  std::string img_file;
  int img_window = 4;
  std::int64_t img_max_m = 64;
  for (const char* name : {"bondal-image", "bprime"}) {
    auto* cmd = app.add_subcommand(
        name, std::string(name) == "bondal-image"
                  ? "stabilized push-forward image classes"
                  : "image classes perturbed by {-1,0,1} per ray");
    cmd->add_option("file", img_file, "fan or parameter JSON")->required();
    cmd->add_option("--window", img_window,
                    "stop after this many stable orders");
    cmd->add_option("--max-m", img_max_m, "largest order to try");
    const bool want_prime = std::string(name) == "bprime";
    cmd->callback([&, want_prime] {
      Space s = load_space(img_file);
      auto cls = class_group(s.fan);
      auto img = bondal_image(s.fan, cls, img_window, img_max_m);
      OJson j = bondal_image_to_json(img);
      std::size_t count = img.classes.size();
      if (want_prime) {
        auto bp = b_prime(s.fan, cls, img);
        count = bp.size();
        j["b_prime_classes"] = bp;
        j["b_prime_count"] = bp.size();
      }
      emit(j, (want_prime ? "b' classes: " : "image classes: ") +
                  std::to_string(count));
    });
  }

  // ---- col ----
  std::string col_file, col_mode = "eq6";
  std::int64_t col_window = 4, col_box_c = -1;
  auto* col_cmd = app.add_subcommand("col",
                                     "the rank-three family collection");
  col_cmd->require_subcommand(1);
  auto add_col = [&](const char* name, const char* help) {
    auto* sub = col_cmd->add_subcommand(name, help);
    sub->add_option("file", col_file, "family parameter JSON")->required();
    sub->add_option("--col2-mode", col_mode, "eq6 | thm")
        ->check(CLI::IsMember({"eq6", "thm"}));
    return sub;
  };
  add_col("build", "ordered collection")->callback([&] {
    auto params = family_params_from_json(load_json_file(col_file));
    emit(collection_to_json(build_col(params, parse_col2_mode(col_mode))));
  });
  add_col("diff", "closed-form pairwise-difference families")->callback([&] {
    auto params = family_params_from_json(load_json_file(col_file));
    auto d = build_diff(params, parse_col2_mode(col_mode));
    emit(diff_to_json(d),
         d.matches_pairwise ? "difference set matches the collection"
                            : "difference set DIFFERS from the collection");
  });
  add_col("verify", "strong exceptionality check")->callback([&] {
    auto params = family_params_from_json(load_json_file(col_file));
    auto ctx = make_family_context(params);
    auto rep = verify_strongly_exceptional(
        ctx, build_col(params, parse_col2_mode(col_mode)));
    emit(exceptional_to_json(rep),
         rep.pass ? "strongly exceptional" : "NOT strongly exceptional");
    if (!rep.pass) exit_code = 1;
  });
  {
    auto* sub = add_col("koszul", "windowed generation closure");
    sub->add_option("--window,-w", col_window, "box radius (default 4)");
    sub->callback([&] {
      auto params = family_params_from_json(load_json_file(col_file));
      auto rep = koszul_generation_check(
          params, build_col(params, parse_col2_mode(col_mode)), col_window);
      emit(koszul_to_json(rep),
           "covered " + std::to_string(rep.covered) + " of " +
               std::to_string(rep.window_size));
    });
  }
  {
    auto* sub = add_col("box", "uniform-twist box containment");
    sub->add_option("--uniform-c", col_box_c,
                    "twist value (default: the uniform value of c)");
    sub->callback([&] {
      auto params = family_params_from_json(load_json_file(col_file));
      std::int64_t c = col_box_c;
      if (c < 0) {
        c = params.c.empty() ? 0 : params.c.front();
        for (auto ci : params.c)
          if (ci != c)
            throw Error("col box: twists are not uniform; pass --uniform-c");
      }
      auto rep = family_box_report(params.n, params.r, params.b, c,
                                   parse_col2_mode(col_mode));
      emit(family_box_to_json(rep));
    });
  }

  // ---- counterexample ----
  std::int64_t ce_k = 0;
  int ce_samples = 8;
  bool ce_box = false;
  int ce_window = 4;
  std::int64_t ce_max_m = 24;
  auto* ce_cmd = app.add_subcommand("counterexample",
                                    "exclusion arithmetic for the rank-3 "
                                    "counterexample");
  ce_cmd->add_option("-k", ce_k, "group size parameter")->required();
  ce_cmd->add_option("--samples", ce_samples,
                     "pairs to certify with the feasibility engine");
  ce_cmd->add_flag("--box", ce_box, "include the push-forward box report");
  ce_cmd->add_option("--box-window", ce_window, "image stabilization window");
  ce_cmd->add_option("--box-max-m", ce_max_m, "largest image order");
  ce_cmd->callback([&] {
    auto rep = counterexample_report(ce_k, ce_samples);
    OJson j = counterexample_to_json(rep);
    bool ok = rep.max_cones_match && rep.all_pairs_valid &&
              rep.all_r_certified;
    for (const auto& s : rep.samples) ok = ok && s.non_acyclic;
    if (ce_box)
      j["box"] = bondal_box_to_json(
          section5_bondal_box(ce_k, ce_window, ce_max_m));
    emit(j, std::string("inequality ") +
                (rep.inequality_holds ? "holds" : "does not hold") +
                (ok ? "" : "; INTERNAL CHECKS FAILED"));
    if (!ok) exit_code = 1;
  });

  // ---- sweep ----
  std::string sweep_file;
  auto* sweep_cmd = app.add_subcommand("sweep",
                                       "run checks over a parameter grid");
  sweep_cmd->add_option("config", sweep_file, "sweep config JSON")
      ->required();
  sweep_cmd->callback([&] {
    auto result = run_sweep(load_json_file(sweep_file));
    emit(result.report,
         result.failures == 0
             ? "sweep: all points pass"
             : "sweep: " + std::to_string(result.failures) + " failures");
    if (result.failures != 0) exit_code = 1;
  });

  // let the global --pretty flag appear after a subcommand too
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* cmd) {
    for (auto* sub : cmd->get_subcommands(
             [](const CLI::App*) { return true; })) {
      sub->fallthrough();
      allow_fallthrough(sub);
    }
  };
  allow_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
