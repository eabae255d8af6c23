#include "liepcd/catalog.hpp"

#include "liepcd/cohomology.hpp"

namespace liepcd {

namespace {

LiePAlgebra abelian_with_pmap(const Field& F, int d, const std::vector<Vec>& pm,
                              const std::string& name) {
  return LiePAlgebra::make(F, d, {}, {}, pm, name);
}

}  // namespace

std::vector<CatalogEntry> catalog_list() {
  return {
      {"abelian", "p, k, d", "d >= 1",
       "abelian with the zero p-map (alias: nil)", true},
      {"nil", "p, k, d", "d >= 1", "abelian with the zero p-map", true},
      {"torus", "p, k, d", "d >= 1", "abelian with e_i^{[p]} = e_i", true},
      {"nonabelian2", "p, k", "",
       "basis {x,y}, [x,y] = x; x^{[p]} = 0, y^{[p]} = y (the only legal p-map); "
       "ships the module Kv with x.v = 0, y.v = -v",
       true},
      {"heisenberg", "p, k", "", "basis {e,f,z}, [e,f] = z, zero p-map", true},
      {"heisenberg-ztorus", "p, k", "",
       "heisenberg with z^{[p]} = z, e and f p-nilpotent", true},
      {"sl2", "p, k", "p > 2",
       "basis {e,h,f}; [h,e] = 2e, [h,f] = -2f, [e,f] = h; h^{[p]} = h", true},
      {"witt", "p, k", "p >= 5",
       "W(1;1): basis e_{-1}..e_{p-2}, [e_i,e_j] = (j-i)e_{i+j}; e_0^{[p]} = e_0",
       true},
      {"nonsplit3-simple", "-", "requires an infinite base field",
       "non-split 3-dimensional simple algebra; x^{[p]} = lambda(x)x with "
       "lambda(x) != 0 for x != 0, so it has no nonzero p-nilpotent elements; "
       "no finite-field model exists, the entry is documentation only",
       false},
  };
}

CatalogResult catalog_get(const std::string& name, int64_t p, int k, int d) {
  Field F = k == 1 ? Field::make(p, 1) : Field::make(p, k);
  if (name == "abelian" || name == "nil") {
    if (d < 1) throw InvalidParams(name + " needs d >= 1");
    std::vector<Vec> pm(static_cast<size_t>(d), vec_zero(F, d));
    return {abelian_with_pmap(F, d, pm, name + "(" + std::to_string(d) + ")"), {}};
  }
  if (name == "torus") {
    if (d < 1) throw InvalidParams("torus needs d >= 1");
    std::vector<Vec> pm;
    for (int i = 0; i < d; ++i) pm.push_back(basis_vec(F, d, i));
    return {abelian_with_pmap(F, d, pm, "torus(" + std::to_string(d) + ")"), {}};
  }
  if (name == "nonabelian2") {
    BracketMap bm;
    bm[{0, 1}] = basis_vec(F, 2, 0);
    std::vector<Vec> pm = {vec_zero(F, 2), basis_vec(F, 2, 1)};
    LiePAlgebra L = LiePAlgebra::make(F, 2, {"x", "y"}, bm, pm, "nonabelian2");
    Matrix rx(F, 1, 1), ry(F, 1, 1);
    ry.set(0, 0, F.from_int(-1));
    RestrictedModule Kv = RestrictedModule::make(L, {rx, ry}, false);
    return {L, {{"Kv", Kv}}};
  }
  if (name == "heisenberg" || name == "heisenberg-ztorus") {
    BracketMap bm;
    bm[{0, 1}] = basis_vec(F, 3, 2);
    std::vector<Vec> pm(3, vec_zero(F, 3));
    if (name == "heisenberg-ztorus") pm[2] = basis_vec(F, 3, 2);
    return {LiePAlgebra::make(F, 3, {"e", "f", "z"}, bm, pm, name), {}};
  }
  if (name == "sl2") {
    if (p <= 2) throw InvalidParams("sl2 needs p > 2 in this presentation");
    BracketMap bm;
    bm[{0, 1}] = Vec{F.from_int(-2), F.zero(), F.zero()};
    bm[{0, 2}] = Vec{F.zero(), F.one(), F.zero()};
    bm[{1, 2}] = Vec{F.zero(), F.zero(), F.from_int(-2)};
    std::vector<Vec> pm = {vec_zero(F, 3), basis_vec(F, 3, 1), vec_zero(F, 3)};
    return {LiePAlgebra::make(F, 3, {"e", "h", "f"}, bm, pm, "sl2"), {}};
  }
  if (name == "witt") {
    if (p < 5) throw InvalidParams("witt needs p >= 5");
    int dim = static_cast<int>(p);
    BracketMap bm;
    std::vector<std::string> names;
    for (int i = -1; i <= dim - 2; ++i) names.push_back("e" + std::to_string(i));
    // basis index i corresponds to the grading degree i - 1
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) {
        int gi = i - 1, gj = j - 1;
        int gsum = gi + gj;
        if (gsum < -1 || gsum > dim - 2) continue;
        Vec v = vec_zero(F, dim);
        v[static_cast<size_t>(gsum + 1)] = F.from_int(gj - gi);
        if (!vec_is_zero(F, v)) bm[{i, j}] = v;
      }
    std::vector<Vec> pm(static_cast<size_t>(dim), vec_zero(F, dim));
    pm[1] = basis_vec(F, dim, 1);  // e_0^{[p]} = e_0
    return {LiePAlgebra::make(F, dim, names, bm, pm, "witt"), {}};
  }
  if (name == "nonsplit3-simple")
    throw InvalidParams("nonsplit3-simple has no finite-field model (documentation entry)");
  throw UnknownEntry("no catalog entry named '" + name + "'");
}

std::vector<ExpectedResult> catalog_expected(const std::string& name, int64_t p,
                                             int d) {
  std::vector<ExpectedResult> rows;
  auto add = [&](std::string id, std::string claim, std::string kind,
                 std::string provenance, std::vector<int> dims = {},
                 std::string verdict = "", int degree = 0) {
    rows.push_back({std::move(id), std::move(claim), std::move(kind),
                    std::move(provenance), std::move(dims), std::move(verdict),
                    degree});
  };
  if (name == "abelian" || name == "nil") {
    std::vector<int> dims;
    for (int n = 0; n <= d + 1; ++n) dims.push_back(binomial(d, n));
    add(name + std::to_string(d) + ".ce", "dim H^n(L,K) = C(" + std::to_string(d) +
            ",n), vanishing beyond n = " + std::to_string(d),
        "ce_dims_trivial", "known", dims);
    add(name + std::to_string(d) + ".cd", "cd* classifies InfiniteEvidence",
        "cd_verdict", "derived", {}, "InfiniteEvidence");
    add(name + std::to_string(d) + ".wdeg", "witness p-polynomial is t^p",
        "witness_deg", "derived", {static_cast<int>(p)});
    return rows;
  }
  if (name == "torus") {
    add("torus" + std::to_string(d) + ".cd", "cd* classifies Zero", "cd_verdict",
        "known", {}, "Zero");
    add("torus" + std::to_string(d) + ".ext",
        "restricted cohomology vanishes in degrees 1..6", "ext_zero_through",
        "known", {}, "", 6);
    add("torus" + std::to_string(d) + ".nil", "nilradical of u(L) is zero",
        "nilradical_zero", "known");
    return rows;
  }
  if (name == "nonabelian2") {
    add("na2.kv", "dim H^2(L, Kv) = 1", "ce_dim_kv", "known", {1}, "", 2);
    add("na2.triv", "dim H^2(L, K) = 0", "ce_dim_trivial_single", "derived", {0},
        "", 2);
    add("na2.cd", "cd* classifies InfiniteEvidence", "cd_verdict", "derived", {},
        "InfiniteEvidence");
    add("na2.wdeg", "witness p-polynomial is t^p", "witness_deg", "derived",
        {static_cast<int>(p)});
    return rows;
  }
  if (name == "heisenberg" || name == "heisenberg-ztorus") {
    if (name == "heisenberg")
      add("heis.ce", "dim H^n(L,K) = 1,2,2,1", "ce_dims_trivial", "derived",
          {1, 2, 2, 1, 0});
    add(name + ".cd", "cd* classifies InfiniteEvidence", "cd_verdict", "derived",
        {}, "InfiniteEvidence");
    add(name + ".wdeg", "witness p-polynomial is t^p", "witness_deg", "derived",
        {static_cast<int>(p)});
    return rows;
  }
  if (name == "sl2") {
    add("sl2.cd", "cd* classifies InfiniteEvidence", "cd_verdict", "derived", {},
        "InfiniteEvidence");
    add("sl2.wdeg", "witness p-polynomial is t^p", "witness_deg", "derived",
        {static_cast<int>(p)});
    return rows;
  }
  if (name == "witt") {
    add("witt.cd", "cd* classifies InfiniteEvidence", "cd_verdict", "derived", {},
        "InfiniteEvidence");
    add("witt.wdeg", "witness p-polynomial is t^p", "witness_deg", "derived",
        {static_cast<int>(p)});
    return rows;
  }
  throw UnknownEntry("no expectations for '" + name + "'");
}

}  // namespace liepcd
