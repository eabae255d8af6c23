#include "liepcd/cli.hpp"

#include <CLI11.hpp>
#include <fstream>

#include "liepcd/cohomology.hpp"
#include "liepcd/suite.hpp"

namespace liepcd {

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw MalformedInput("invalid JSON in '" + path + "': " + e.what());
  }
}

void emit(const json& j, bool as_json, std::ostream& out,
          const std::function<void(const json&, std::ostream&)>& render) {
  if (as_json)
    out << j.dump(2) << "\n";
  else
    render(j, out);
}

void render_dims(const json& j, std::ostream& out) {
  out << j.value("algebra", "") << " with " << j.value("module", "trivial")
      << " coefficients:\n";
  const auto& dims = j.at("dims");
  for (size_t n = 0; n < dims.size(); ++n)
    out << "  H^" << n << " = " << dims[n].get<int>() << "\n";
  if (j.contains("euler_ok")) out << "  euler check: " << (j.at("euler_ok").get<bool>() ? "ok" : "FAIL") << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations with finite-dimensional Lie p-algebras over finite fields"};
  app.require_subcommand(1);

  uint64_t seed = 0;
  bool as_json = false;
  uint64_t guard_dim = 512;
  app.add_option("--seed", seed, "seed for all randomized searches")
      ->envname("LIEPCD_SEED");
  app.add_flag("--json", as_json, "machine-readable JSON output");
  app.add_option("--guard-dim", guard_dim, "dimension guard for u(L)");

  std::string alg_path, module_path, out_path, name;
  int max_degree = 6;
  int force_n = -1;
  bool no_basis_scan = false, exhaustive = false, randomized = false;
  uint64_t samples = 20000;
  int64_t p = 2;
  int k = 1, d = 0;

  auto* c_verify = app.add_subcommand("verify", "check the p-algebra axioms of a file");
  c_verify->add_option("algebra", alg_path)->required();

  auto* c_coh = app.add_subcommand("cohomology", "Chevalley-Eilenberg cohomology dimensions");
  c_coh->add_option("algebra", alg_path)->required();
  c_coh->add_option("--module", module_path, "module file (default: trivial)");
  c_coh->add_option("--max-degree", max_degree);

  auto* c_rcoh = app.add_subcommand("rcohomology",
                                    "restricted cohomology (Ext over u(L)) dimensions");
  c_rcoh->add_option("algebra", alg_path)->required();
  c_rcoh->add_option("--module", module_path, "restricted module file (default: trivial)");
  c_rcoh->add_option("--max-degree", max_degree);

  auto* c_torus = app.add_subcommand("torus", "torus test");
  c_torus->add_option("algebra", alg_path)->required();

  auto* c_nil = app.add_subcommand("nilpotent", "search for a nonzero p-nilpotent element");
  c_nil->add_option("algebra", alg_path)->required();
  c_nil->add_option("--n", force_n, "force the almost-periodicity exponent");
  c_nil->add_flag("--no-basis-scan", no_basis_scan);

  auto* c_sub = app.add_subcommand("subalg2", "search for a two-dimensional subalgebra");
  c_sub->add_option("algebra", alg_path)->required();
  c_sub->add_flag("--exhaustive", exhaustive);
  c_sub->add_flag("--random", randomized);
  c_sub->add_option("--samples", samples);

  auto* c_cd = app.add_subcommand("classify-cdstar",
                                  "zero-or-infinity classification with witness");
  c_cd->add_option("algebra", alg_path)->required();
  c_cd->add_option("--max-degree", max_degree);

  auto* c_cat = app.add_subcommand("catalog", "built-in example algebras");
  auto* c_list = c_cat->add_subcommand("list", "list catalog entries");
  auto* c_emit = c_cat->add_subcommand("emit", "write a catalog algebra as JSON");
  c_emit->add_option("name", name)->required();
  c_emit->add_option("-p,--prime", p);
  c_emit->add_option("-k,--ext", k);
  c_emit->add_option("-d,--dim", d);
  c_emit->add_option("-o,--out", out_path);
  c_cat->require_subcommand(1);

  auto* c_suite = app.add_subcommand("suite", "run the full verification suite");

  std::vector<const char*> argv;
  argv.push_back("liepcd");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (c_verify->parsed()) {
      LiePAlgebra L = algebra_from_json(load_json(alg_path), false);
      AxiomReport rep = verify_axioms(L);
      json j{{"command", "verify"}, {"algebra", L.name()}, {"report", axiom_report_to_json(rep)}};
      emit(j, as_json, out, [&](const json& jj, std::ostream& o) {
        o << (rep.ok() ? "ok: " : "FAIL: ") << jj["report"].dump() << "\n";
      });
      return rep.ok() ? 0 : 1;
    }
    if (c_coh->parsed()) {
      LiePAlgebra L = algebra_from_json(load_json(alg_path));
      RestrictedModule M = module_path.empty() ? trivial_module(L)
                                               : module_from_json(load_json(module_path));
      CEComplex C(L, M);
      std::vector<int> dims;
      for (int n = 0; n <= max_degree; ++n) dims.push_back(C.cohomology_dim(n));
      json j{{"command", "cohomology"}, {"algebra", L.name()},
             {"module", module_path.empty() ? "trivial" : module_path},
             {"dims", dims}, {"euler_ok", C.euler_check()}};
      emit(j, as_json, out, render_dims);
      return 0;
    }
    if (c_rcoh->parsed()) {
      LiePAlgebra L = algebra_from_json(load_json(alg_path));
      RestrictedModule M = module_path.empty() ? trivial_module(L)
                                               : module_from_json(load_json(module_path));
      auto dims = ext_dims(L, M, max_degree, guard_dim);
      json j{{"command", "rcohomology"}, {"algebra", L.name()},
             {"module", module_path.empty() ? "trivial" : module_path}, {"dims", dims}};
      emit(j, as_json, out, render_dims);
      return 0;
    }
    if (c_torus->parsed()) {
      LiePAlgebra L = algebra_from_json(load_json(alg_path));
      bool t = is_torus(L);
      json j{{"command", "torus"}, {"algebra", L.name()}, {"is_torus", t}};
      emit(j, as_json, out, [&](const json&, std::ostream& o) {
        o << L.name() << (t ? " is a torus\n" : " is not a torus\n");
      });
      return 0;
    }
    if (c_nil->parsed()) {
      LiePAlgebra L = algebra_from_json(load_json(alg_path));
      NilpotentSearchOptions opts;
      opts.basis_scan = !no_basis_scan;
      opts.n_override = force_n;
      opts.seed = seed;
      NilpotentSearchResult r = find_p_nilpotent(L, opts);
      json j = nilpotent_search_to_json(L, r);
      j["command"] = "nilpotent";
      j["algebra"] = L.name();
      emit(j, as_json, out, [&](const json& jj, std::ostream& o) {
        if (r.found)
          o << "found a p-nilpotent element (extension degree "
            << r.extension_degree << ", " << r.nilpotency_steps << " p-power step(s))\n";
        else
          o << "no p-nilpotent element found\n";
        for (const auto& a : jj.at("attempts")) o << "  " << a.get<std::string>() << "\n";
      });
      return 0;
    }
    if (c_sub->parsed()) {
      LiePAlgebra L = algebra_from_json(load_json(alg_path));
      SearchMode mode = SearchMode::Auto;
      if (exhaustive && randomized)
        throw MalformedInput("--exhaustive and --random are mutually exclusive");
      if (exhaustive) mode = SearchMode::Exhaustive;
      if (randomized) mode = SearchMode::Randomized;
      SubalgebraPairResult r = find_2dim_subalgebra(L, mode, samples, seed);
      json j = subalgebra_pair_to_json(L, r);
      j["command"] = "subalg2";
      j["algebra"] = L.name();
      emit(j, as_json, out, [&](const json&, std::ostream& o) {
        if (r.found)
          o << "two-dimensional subalgebra: span{" << element_label(L, r.a) << ", "
            << element_label(L, r.b) << "}\n";
        else
          o << (r.exhaustive ? "none exists (exhaustive scan)\n"
                             : "none found (randomized scan, inconclusive)\n");
      });
      return 0;
    }
    if (c_cd->parsed()) {
      LiePAlgebra L = algebra_from_json(load_json(alg_path));
      CdOptions opts;
      opts.degree_bound = max_degree;
      opts.seed = seed;
      CdStarClassification r = cd_star_classify(L, opts);
      json j = cd_classification_to_json(L, r);
      j["command"] = "classify-cdstar";
      j["algebra"] = L.name();
      emit(j, as_json, out, [&](const json& jj, std::ostream& o) {
        o << L.name() << ": " << jj.at("verdict").get<std::string>() << "\n";
        if (jj.contains("witness"))
          o << "  witness " << jj.at("witness").get<std::string>()
            << " with p-polynomial of degree " << jj.at("witness_f_degree").get<int>()
            << "\n";
      });
      return 0;
    }
    if (c_list->parsed()) {
      json entries = json::array();
      for (const auto& e : catalog_list())
        entries.push_back(json{{"name", e.name}, {"params", e.params},
                               {"constraints", e.constraints},
                               {"description", e.description},
                               {"supported", e.supported}});
      json j{{"command", "catalog-list"}, {"entries", entries}};
      emit(j, as_json, out, [&](const json&, std::ostream& o) {
        for (const auto& e : catalog_list())
          o << e.name << (e.supported ? "" : " [unsupported-field]") << "  ("
            << e.params << (e.constraints.empty() ? "" : "; " + e.constraints) << ")\n    "
            << e.description << "\n";
      });
      return 0;
    }
    if (c_emit->parsed()) {
      CatalogResult cr = catalog_get(name, p, k, d);
      json j = algebra_to_json(cr.algebra);
      if (!out_path.empty()) {
        std::ofstream of(out_path);
        if (!of) throw MalformedInput("cannot write '" + out_path + "'");
        of << j.dump(2) << "\n";
        out << "wrote " << out_path << "\n";
      } else {
        out << j.dump(2) << "\n";
      }
      return 0;
    }
    if (c_suite->parsed()) {
      SuiteReport rep = run_suite(seed);
      if (as_json)
        out << rep.to_json().dump(2) << "\n";
      else
        out << rep.to_text();
      return rep.pass() ? 0 : 1;
    }
  } catch (const MalformedInput& e) {
    if (as_json) out << json{{"error", {{"code", e.code}, {"message", e.what()}}}}.dump(2) << "\n";
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownEntry& e) {
    if (as_json) out << json{{"error", {{"code", e.code}, {"message", e.what()}}}}.dump(2) << "\n";
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidParams& e) {
    if (as_json) out << json{{"error", {{"code", e.code}, {"message", e.what()}}}}.dump(2) << "\n";
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (as_json) out << json{{"error", {{"code", e.code}, {"message", e.what()}}}}.dump(2) << "\n";
    err << "error [" << e.code << "]: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace liepcd
