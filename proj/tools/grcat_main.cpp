#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "grcat/catalog.hpp"
#include "grcat/cohomology.hpp"
#include "grcat/error.hpp"
#include "grcat/functor.hpp"
#include "grcat/io.hpp"
#include "grcat/kernel.hpp"
#include "grcat/kernel_search.hpp"
#include "grcat/reduction.hpp"
#include "grcat/strictify.hpp"

using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

struct Options {
  bool json = false;
  uint64_t seed = 0;
  int64_t bound = grcat::CohomologyContext::kDefaultBruteBound;
};

ordered_json cochain_values_json(const grcat::Cochain& c) {
  ordered_json values = ordered_json::object();
  const grcat::AbelianGroup& a = c.mod().carrier();
  for (size_t slot = 0; slot < c.tuples(); ++slot) {
    if (c.value_by_slot(slot) == 0) continue;
    std::string key;
    auto tuple = c.tuple_of_slot(slot);
    for (size_t i = 0; i < tuple.size(); ++i) key += (i ? "," : "") + std::to_string(tuple[i]);
    values[key] = a.element_at(c.value_by_slot(slot));
  }
  return values;
}

std::string cochain_brief(const grcat::Cochain& c) {
  if (c.is_zero()) return "0";
  std::string s;
  int shown = 0;
  const grcat::AbelianGroup& a = c.mod().carrier();
  for (size_t slot = 0; slot < c.tuples(); ++slot) {
    if (c.value_by_slot(slot) == 0) continue;
    if (shown == 8) {
      s += ", ...";
      break;
    }
    auto tuple = c.tuple_of_slot(slot);
    std::string key;
    for (size_t i = 0; i < tuple.size(); ++i) key += (i ? "," : "") + std::to_string(tuple[i]);
    auto v = a.element_at(c.value_by_slot(slot));
    std::string val;
    for (size_t i = 0; i < v.size(); ++i) val += (i ? "," : "") + std::to_string(v[i]);
    s += (shown ? ", " : "") + ("(" + key + ")=" + val);
    ++shown;
  }
  return s;
}

int cmd_validate(const std::string& path, const Options& opt) {
  grcat::io::Workspace ws;
  grcat::io::Object obj = ws.load(path);
  std::string kind = grcat::io::kind_of(obj);
  if (opt.json) {
    ordered_json j;
    j["kind"] = kind;
    j["valid"] = true;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "valid " << kind << ": " << path << "\n";
  }
  return 0;
}

int cmd_cohomology(const std::string& path, int degree, const std::string& method,
                   const Options& opt) {
  grcat::io::Workspace ws;
  auto mod = std::make_shared<const grcat::PiModule>(ws.load_module(path));
  grcat::CohomologyContext ctx(mod);

  std::optional<grcat::CohomologyGroup> snf, brute;
  if (method == "snf" || method == "both")
    snf = ctx.group(degree, grcat::CohomologyMethod::snf, opt.bound);
  if (method == "brute" || method == "both")
    brute = ctx.group(degree, grcat::CohomologyMethod::brute_force, opt.bound);
  if (snf && brute && snf->invariant_factors != brute->invariant_factors) {
    std::cerr << "method disagreement: snf " << snf->describe() << " vs brute "
              << brute->describe() << "\n";
    return 1;
  }
  const grcat::CohomologyGroup& h = snf ? *snf : *brute;

  if (opt.json) {
    ordered_json j;
    j["degree"] = degree;
    j["invariant_factors"] = h.invariant_factors;
    j["group"] = h.describe();
    ordered_json reps = ordered_json::array();
    for (const auto& r : h.representatives) reps.push_back(cochain_values_json(r));
    j["representatives"] = reps;
    if (snf && brute) j["methods_agree"] = true;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "H^" << degree << " = " << h.describe() << "\n";
    for (size_t i = 0; i < h.representatives.size(); ++i)
      std::cout << "  generator " << i << " (order " << h.invariant_factors[i]
                << "): " << cochain_brief(h.representatives[i]) << "\n";
    if (snf && brute) std::cout << "methods agree: snf and brute force\n";
  }
  return 0;
}

int cmd_obstruction(const std::string& path, const Options& opt) {
  grcat::io::Workspace ws;
  grcat::FunctorData f = ws.load_functor(path);
  grcat::Cochain k = grcat::obstruction(f);
  std::optional<grcat::Cochain> g = grcat::realizable(f);

  if (opt.json) {
    ordered_json j;
    j["obstruction"] = cochain_values_json(k);
    j["class_zero"] = g.has_value();
    j["realizable"] = g.has_value();
    if (g) j["witness"] = cochain_values_json(*g);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "obstruction cochain: " << cochain_brief(k) << "\n";
    std::cout << "obstruction class: " << (g ? "0" : "nonzero") << "\n";
    std::cout << "realizable: " << (g ? "yes" : "no") << "\n";
    if (g) std::cout << "monoidal witness g: " << cochain_brief(*g) << "\n";
  }
  return 0;
}

int cmd_classify(const std::string& path, const Options& opt) {
  grcat::io::Workspace ws;
  grcat::FunctorData f = ws.load_functor(path);
  std::vector<grcat::AbelianGroup::Elem> fimgs = f.f_gen_images;
  auto functors = grcat::classify(f.source, f.target, f.phi.image(), fimgs);

  if (opt.json) {
    ordered_json j;
    j["classes"] = functors.size();
    ordered_json reps = ordered_json::array();
    for (const auto& fd : functors) reps.push_back(cochain_values_json(*fd.g));
    j["representatives"] = reps;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << functors.size() << " congruence class(es)\n";
    for (size_t i = 0; i < functors.size(); ++i)
      std::cout << "  class " << i << ": g = " << cochain_brief(*functors[i].g) << "\n";
  }
  return 0;
}

int cmd_congruent(const std::string& patha, const std::string& pathb, const Options& opt) {
  grcat::io::Workspace ws;
  grcat::FunctorData fa = ws.load_functor(patha);
  grcat::FunctorData fb = ws.load_functor(pathb);
  auto alpha = grcat::congruent(fa, fb);
  if (opt.json) {
    ordered_json j;
    j["congruent"] = alpha.has_value();
    if (alpha) j["witness"] = cochain_values_json(*alpha);
    std::cout << j.dump(2) << "\n";
  } else {
    if (alpha)
      std::cout << "congruent; natural transformation alpha: " << cochain_brief(*alpha) << "\n";
    else
      std::cout << "not congruent\n";
  }
  return 0;
}

int cmd_automorphisms(const std::string& path, const Options& opt) {
  grcat::io::Workspace ws;
  grcat::FunctorData f = ws.load_functor(path);
  auto autos = grcat::functor_automorphisms(f);
  if (opt.json) {
    ordered_json j;
    j["count"] = autos.size();
    ordered_json arr = ordered_json::array();
    for (const auto& a : autos) arr.push_back(cochain_values_json(a));
    j["automorphisms"] = arr;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << autos.size() << " monoidal automorphism(s)\n";
    for (size_t i = 0; i < autos.size(); ++i)
      std::cout << "  alpha " << i << ": " << cochain_brief(autos[i]) << "\n";
  }
  return 0;
}

int cmd_reduce(const std::string& path, bool randomize, const Options& opt) {
  grcat::io::Workspace ws;
  grcat::FiniteGroup g = ws.load_group(path);
  grcat::AutData aut = grcat::automorphism_data(g);
  grcat::GrType direct = grcat::reduced_type_of_group(aut);

  // Cross-check through the category route, with an optional random stick.
  grcat::AutCategory ac = grcat::aut_gr_category(aut);
  grcat::Reduction red = grcat::reduce_strict(
      ac.cat, randomize ? grcat::StickPolicy::randomized : grcat::StickPolicy::deterministic,
      opt.seed);
  grcat::CohomologyContext ctx(direct.module);
  bool same_pi = red.type.group().order() == direct.group().order();
  bool same_a = red.type.carrier().invariant_factors() == direct.carrier().invariant_factors();

  if (opt.json) {
    ordered_json j;
    j["out_order"] = direct.group().order();
    j["center"] = direct.carrier().describe();
    j["xi"] = cochain_values_json(direct.xi);
    j["category_route_consistent"] = same_pi && same_a;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "reduced type of " << path << "\n";
    std::cout << "  base group: Out of order " << direct.group().order() << "\n";
    std::cout << "  coefficients: center = " << direct.carrier().describe() << "\n";
    std::cout << "  xi: " << cochain_brief(direct.xi) << "\n";
    std::cout << "  category route agrees on (base, coefficients): "
              << ((same_pi && same_a) ? "yes" : "NO") << "\n";
  }
  return same_pi && same_a ? 0 : 1;
}

int cmd_aut_category(const std::string& path, const Options& opt) {
  grcat::io::Workspace ws;
  grcat::FiniteGroup g = ws.load_group(path);
  grcat::AutData aut = grcat::automorphism_data(g);
  grcat::AutCategory ac = grcat::aut_gr_category(aut);
  if (opt.json) {
    ordered_json j;
    j["objects"] = ac.cat.n_obj();
    j["arrows"] = ac.cat.n_arr();
    j["unit"] = ac.cat.objects[ac.cat.unit];
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << ac.cat.dump();
  }
  return 0;
}

int cmd_strictify(const std::string& path, const Options& opt) {
  grcat::io::Workspace ws;
  grcat::AbstractKernel k = ws.load_kernel(path);
  grcat::StrictificationReport report = grcat::verify_strictification(k);

  int strict_checks = std::min<int>(3, static_cast<int>(report.checks.size()));
  int strict_passed = 0;
  for (int i = 0; i < strict_checks; ++i) strict_passed += report.checks[i].passed;

  if (opt.json) {
    ordered_json j;
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
      ordered_json cj;
      cj["name"] = c.name;
      cj["passed"] = c.passed;
      cj["detail"] = c.detail;
      checks.push_back(cj);
    }
    j["checks"] = checks;
    j["ok"] = report.ok();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "strictification checks: " << (strict_passed == 3 ? "PASS" : "FAIL") << " ("
              << strict_passed << "/3)\n";
    for (const auto& c : report.checks)
      std::cout << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << ": " << c.detail
                << "\n";
  }
  return report.ok() ? 0 : 1;
}

int cmd_extension(const std::string& path, const Options& opt) {
  grcat::io::Workspace ws;
  grcat::AbstractKernel k = ws.load_kernel(path);
  grcat::FactorSet fs = grcat::factor_set(k);
  grcat::FiniteGroup e = grcat::build_extension(k, fs);

  // Identify against the catalog when the order is in range.
  std::string identified = "order " + std::to_string(e.order());
  for (const auto& entry : grcat::small_group_catalog()) {
    if (entry.group.order() != e.order()) continue;
    if (grcat::find_isomorphism(e, entry.group)) {
      identified = entry.name;
      break;
    }
  }

  if (opt.json) {
    ordered_json j;
    j["order"] = e.order();
    j["identified_as"] = identified;
    j["group"] = ordered_json::parse(grcat::io::serialize(e));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "extension group of order " << e.order() << ", isomorphic to " << identified
              << "\n";
  }
  return 0;
}

int cmd_kernel_search(const std::string& path, const std::string& catalog_dir,
                      const Options& opt) {
  grcat::io::Workspace ws;
  grcat::GrType t = ws.load_gr_type(path);

  std::vector<grcat::NamedGroup> catalog;
  if (catalog_dir.empty()) {
    catalog = grcat::small_group_catalog();
  } else {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(catalog_dir))
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) catalog.push_back({f.stem().string(), ws.load_group(f)});
  }

  grcat::KernelSearchResult result = grcat::kernel_search(t, catalog);
  if (opt.json) {
    ordered_json j;
    ordered_json arr = ordered_json::array();
    for (const auto& m : result.matches) {
      ordered_json mj;
      mj["group"] = m.group_name;
      mj["psi"] = m.psi_image;
      mj["theta"] = m.theta;
      arr.push_back(mj);
    }
    j["matches"] = arr;
    j["skipped"] = result.skipped;
    std::cout << j.dump(2) << "\n";
  } else {
    if (result.matches.empty()) {
      std::cout << "no realization in catalog\n";
    } else {
      std::cout << result.matches.size() << " realization(s):\n";
      for (const auto& m : result.matches) {
        std::cout << "  " << m.group_name << " with psi = [";
        for (size_t i = 0; i < m.psi_image.size(); ++i)
          std::cout << (i ? "," : "") << m.psi_image[i];
        std::cout << "]\n";
      }
    }
    for (const auto& s : result.skipped) std::cout << "  skipped " << s << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with skeletal categorical groups: cohomology, functor "
               "obstructions, group reductions and extension kernels"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_option("--seed", opt.seed, "seed for randomized modes");
  app.add_option("--bound", opt.bound, "brute-force enumeration bound");

  std::string path, path_b, method = "snf", catalog_dir;
  int degree = 2;
  bool randomize = false;

  CLI::App* validate = app.add_subcommand("validate", "load and validate an object file");
  validate->add_option("file", path)->required();

  CLI::App* cohomology = app.add_subcommand("cohomology", "cohomology of a module file");
  cohomology->add_option("file", path)->required();
  cohomology->add_option("--degree", degree, "degree 0..3")->required();
  cohomology->add_option("--method", method, "snf | brute | both");

  CLI::App* obstruction = app.add_subcommand("obstruction", "obstruction of a functor file");
  obstruction->add_option("file", path)->required();

  CLI::App* classify = app.add_subcommand("classify", "congruence classes of a (phi,f) pair");
  classify->add_option("file", path)->required();

  CLI::App* congruent = app.add_subcommand("congruent", "congruence witness for two functors");
  congruent->add_option("first", path)->required();
  congruent->add_option("second", path_b)->required();

  CLI::App* automorphisms =
      app.add_subcommand("automorphisms", "monoidal automorphisms of a functor");
  automorphisms->add_option("file", path)->required();

  CLI::App* reduce = app.add_subcommand("reduce", "reduced type of a group file");
  reduce->add_option("file", path)->required();
  reduce->add_flag("--randomize", randomize, "randomized stick (with --seed)");

  CLI::App* autcat = app.add_subcommand("aut-category", "automorphism category listing");
  autcat->add_option("file", path)->required();

  CLI::App* strictify = app.add_subcommand("strictify", "strictification checks for a kernel");
  strictify->add_option("file", path)->required();

  CLI::App* extension = app.add_subcommand("extension", "crossed-product extension of a kernel");
  extension->add_option("file", path)->required();

  CLI::App* search = app.add_subcommand("kernel-search", "realization search for a gr-type");
  search->add_option("file", path)->required();
  search->add_option("--catalog", catalog_dir, "directory of group files (default: built-in)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(path, opt);
    if (cohomology->parsed()) {
      if (method != "snf" && method != "brute" && method != "both") {
        std::cerr << "unknown method '" << method << "'\n";
        return 2;
      }
      return cmd_cohomology(path, degree, method, opt);
    }
    if (obstruction->parsed()) return cmd_obstruction(path, opt);
    if (classify->parsed()) return cmd_classify(path, opt);
    if (congruent->parsed()) return cmd_congruent(path, path_b, opt);
    if (automorphisms->parsed()) return cmd_automorphisms(path, opt);
    if (reduce->parsed()) return cmd_reduce(path, randomize, opt);
    if (autcat->parsed()) return cmd_aut_category(path, opt);
    if (strictify->parsed()) return cmd_strictify(path, opt);
    if (extension->parsed()) return cmd_extension(path, opt);
    if (search->parsed()) return cmd_kernel_search(path, catalog_dir, opt);
  } catch (const grcat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
