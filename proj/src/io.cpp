#include "liepcd/io.hpp"

namespace liepcd {

json field_to_json(const Field& F) {
  return json{{"p", F.p()}, {"k", F.k()}, {"modulus", F.modulus()}};
}

Field field_from_json(const json& j) {
  if (!j.contains("p")) throw MalformedInput("field needs p");
  int64_t p = j.at("p").get<int64_t>();
  if (j.contains("modulus"))
    return Field::with_modulus(p, j.at("modulus").get<std::vector<int64_t>>());
  int k = j.value("k", 1);
  return Field::make(p, k);
}

json fel_to_json(const Field& F, const Fel& a) {
  (void)F;
  return json(a);
}

Fel fel_from_json(const Field& F, const json& j) {
  if (j.is_number_integer()) return F.from_int(j.get<int64_t>());
  if (!j.is_array()) throw MalformedInput("field element must be an integer array");
  auto v = j.get<std::vector<int64_t>>();
  if (static_cast<int>(v.size()) > F.k())
    throw MalformedInput("field element has too many coefficients");
  Fel out = F.zero();
  for (size_t i = 0; i < v.size(); ++i)
    out[i] = ((v[i] % F.p()) + F.p()) % F.p();
  return out;
}

json vec_to_json(const Field& F, const Vec& v) {
  json out = json::array();
  for (const auto& a : v) out.push_back(fel_to_json(F, a));
  return out;
}

Vec vec_from_json(const Field& F, const json& j, int expect_len) {
  if (!j.is_array() || static_cast<int>(j.size()) != expect_len)
    throw MalformedInput("coefficient vector of length " + std::to_string(expect_len) +
                         " expected");
  Vec out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(fel_from_json(F, e));
  return out;
}

json algebra_to_json(const LiePAlgebra& L) {
  const Field& F = L.field();
  json brackets = json::array();
  for (const auto& [ij, v] : L.sparse_brackets())
    brackets.push_back(json{{"i", ij.first}, {"j", ij.second}, {"value", vec_to_json(F, v)}});
  json pmap = json::array();
  for (int i = 0; i < L.dim(); ++i) pmap.push_back(vec_to_json(F, L.pmap_basis(i)));
  return json{{"name", L.name()},       {"p", F.p()},
              {"k", F.k()},             {"modulus", F.modulus()},
              {"dim", L.dim()},         {"basis", L.basis_names()},
              {"brackets", brackets},   {"pmap", pmap}};
}

LiePAlgebra algebra_from_json(const json& j, bool validate) {
  Field F = field_from_json(j);
  if (!j.contains("dim")) throw MalformedInput("algebra needs dim");
  int dim = j.at("dim").get<int>();
  if (dim < 0) throw MalformedInput("negative dimension");
  std::vector<std::string> names;
  if (j.contains("basis")) names = j.at("basis").get<std::vector<std::string>>();
  BracketMap bm;
  if (j.contains("brackets")) {
    for (const auto& b : j.at("brackets")) {
      int i = b.at("i").get<int>(), jj = b.at("j").get<int>();
      if (bm.count({i, jj})) throw MalformedInput("duplicate bracket entry");
      bm[{i, jj}] = vec_from_json(F, b.at("value"), dim);
    }
  }
  std::vector<Vec> pmap(static_cast<size_t>(dim), vec_zero(F, dim));
  if (j.contains("pmap")) {
    const auto& pj = j.at("pmap");
    if (static_cast<int>(pj.size()) != dim)
      throw MalformedInput("pmap needs one vector per basis element");
    for (int i = 0; i < dim; ++i) pmap[static_cast<size_t>(i)] = vec_from_json(F, pj[static_cast<size_t>(i)], dim);
  }
  std::string name = j.value("name", "");
  if (validate) return LiePAlgebra::make(F, dim, names, bm, pmap, name);
  return LiePAlgebra::make_unvalidated(F, dim, names, bm, pmap, name);
}

json module_to_json(const RestrictedModule& M, const std::string& name) {
  const Field& F = M.algebra().field();
  json action = json::array();
  for (int i = 0; i < M.algebra().dim(); ++i) {
    json mat = json::array();
    for (int r = 0; r < M.dim(); ++r) mat.push_back(vec_to_json(F, M.rho_basis(i).row(r)));
    action.push_back(mat);
  }
  json out{{"algebra", algebra_to_json(M.algebra())}, {"dim", M.dim()}, {"action", action}};
  if (!name.empty()) out["name"] = name;
  return out;
}

namespace {

LiePAlgebra algebra_ref_from_json(const json& j) {
  if (j.contains("catalog")) {
    std::string name = j.at("catalog").get<std::string>();
    int64_t p = j.at("p").get<int64_t>();
    int k = j.value("k", 1);
    int d = j.value("d", 0);
    return catalog_get(name, p, k, d).algebra;
  }
  return algebra_from_json(j);
}

}  // namespace

RestrictedModule module_from_json(const json& j) {
  if (!j.contains("algebra"))
    throw MalformedInput("module needs an algebra (inline or {catalog, p, ...})");
  return module_from_json(j, algebra_ref_from_json(j.at("algebra")));
}

RestrictedModule module_from_json(const json& j, const LiePAlgebra& L) {
  const Field& F = L.field();
  int dm = j.at("dim").get<int>();
  const auto& action = j.at("action");
  if (static_cast<int>(action.size()) != L.dim())
    throw MalformedInput("module needs one action matrix per basis element");
  std::vector<Matrix> rho;
  for (const auto& mj : action) {
    if (static_cast<int>(mj.size()) != dm) throw MalformedInput("action matrix shape");
    Matrix m(F, dm, dm);
    for (int r = 0; r < dm; ++r) {
      Vec row = vec_from_json(F, mj[static_cast<size_t>(r)], dm);
      for (int c = 0; c < dm; ++c) m.set(r, c, row[static_cast<size_t>(c)]);
    }
    rho.push_back(std::move(m));
  }
  return RestrictedModule::make(L, std::move(rho), false);
}

json axiom_report_to_json(const AxiomReport& r) {
  json violations = json::array();
  for (const auto& [axiom, witness] : r.violations)
    violations.push_back(json{{"axiom", axiom}, {"witness", witness}});
  return json{{"antisym_ok", r.antisym_ok}, {"jacobi_ok", r.jacobi_ok},
              {"ad_compat_ok", r.ad_compat_ok}, {"semilinear_ok", r.semilinear_ok},
              {"jacobson_ok", r.jacobson_ok}, {"violations", violations},
              {"ok", r.ok()}};
}

json almost_periodic_to_json(const LiePAlgebra& L, const AlmostPeriodicReport& r) {
  const Field& F = L.field();
  json lambdas = json::object();
  for (const auto& [label, lam] : r.lambda_table) lambdas[label] = fel_to_json(F, lam);
  json out{{"holds", r.holds}, {"n_max", r.n_max}, {"seed", r.seed}};
  if (r.holds) {
    out["n"] = r.n_used;
    out["lambda"] = lambdas;
  }
  if (r.failure_witness.has_value()) {
    out["failure_element"] = vec_to_json(F, r.failure_witness->first);
    out["failure_iterate"] = vec_to_json(F, r.failure_witness->second);
  }
  return out;
}

json nilpotent_search_to_json(const LiePAlgebra& L, const NilpotentSearchResult& r) {
  json out{{"found", r.found}, {"seed", r.seed}, {"attempts", r.attempts}};
  if (r.found) {
    out["element"] = vec_to_json(r.ext_field, r.element);
    out["extension"] = field_to_json(r.ext_field);
    out["extension_degree"] = r.extension_degree;
    out["nilpotency_steps"] = r.nilpotency_steps;
  }
  if (r.phi.has_value()) {
    json phic = json::array();
    for (const auto& c : r.phi->c) phic.push_back(fel_to_json(L.field(), c));
    out["phi"] = phic;
  }
  if (r.pair.has_value()) {
    out["pair"] = json{{"x", vec_to_json(L.field(), r.pair->first)},
                       {"y", vec_to_json(L.field(), r.pair->second)}};
  }
  if (r.periodicity.has_value())
    out["almost_periodicity"] = almost_periodic_to_json(L, *r.periodicity);
  return out;
}

json subalgebra_pair_to_json(const LiePAlgebra& L, const SubalgebraPairResult& r) {
  json out{{"found", r.found}, {"exhaustive", r.exhaustive}, {"tried", r.tried},
           {"seed", r.seed}};
  if (r.found) {
    out["a"] = vec_to_json(L.field(), r.a);
    out["b"] = vec_to_json(L.field(), r.b);
    out["a_label"] = element_label(L, r.a);
    out["b_label"] = element_label(L, r.b);
  }
  return out;
}

json cd_classification_to_json(const LiePAlgebra& L, const CdStarClassification& c) {
  const Field& F = L.field();
  json out{{"verdict", c.verdict == CdVerdict::Zero ? "Zero" : "InfiniteEvidence"},
           {"degree_bound", c.degree_bound},
           {"seed", c.seed}};
  if (c.witness_x.has_value()) {
    out["witness"] = element_label(L, *c.witness_x);
    out["witness_coords"] = vec_to_json(F, *c.witness_x);
    json fc = json::array();
    for (const auto& coeff : c.witness_f->c) fc.push_back(fel_to_json(F, coeff));
    out["witness_f"] = fc;
    out["witness_f_degree"] = c.witness_f->deg();
  }
  if (!c.holm_dims.empty()) out["holm_dims"] = c.holm_dims;
  if (!c.witness_sub_ext_dims.empty()) out["witness_subalgebra_ext_dims"] = c.witness_sub_ext_dims;
  if (!c.ext_dims_checked.empty()) out["ext_dims"] = c.ext_dims_checked;
  return out;
}

}  // namespace liepcd
