#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liepcd/analysis.hpp"

using namespace liepcd;

namespace {

LiePAlgebra make_sl2(int64_t p) {
  Field F = Field::make(p, 1);
  BracketMap bm;
  bm[{0, 1}] = Vec{F.from_int(-2), F.zero(), F.zero()};
  bm[{0, 2}] = Vec{F.zero(), F.one(), F.zero()};
  bm[{1, 2}] = Vec{F.zero(), F.zero(), F.from_int(-2)};
  std::vector<Vec> pm = {vec_zero(F, 3), basis_vec(F, 3, 1), vec_zero(F, 3)};
  return LiePAlgebra::make(F, 3, {"e", "h", "f"}, bm, pm, "sl2");
}

LiePAlgebra make_heisenberg(int64_t p) {
  Field F = Field::make(p, 1);
  BracketMap bm;
  bm[{0, 1}] = basis_vec(F, 3, 2);
  return LiePAlgebra::make(F, 3, {"e", "f", "z"}, bm,
                           std::vector<Vec>(3, vec_zero(F, 3)), "heisenberg");
}

LiePAlgebra make_torus(int64_t p, int d) {
  Field F = Field::make(p, 1);
  std::vector<Vec> pm;
  for (int i = 0; i < d; ++i) pm.push_back(basis_vec(F, d, i));
  return LiePAlgebra::make(F, d, {}, {}, pm, "torus");
}

LiePAlgebra make_nil(int64_t p, int d) {
  Field F = Field::make(p, 1);
  return LiePAlgebra::make(F, d, {}, {}, std::vector<Vec>(static_cast<size_t>(d), vec_zero(F, d)),
                           "nil");
}

LiePAlgebra make_nonabelian2(int64_t p) {
  Field F = Field::make(p, 1);
  BracketMap bm;
  bm[{0, 1}] = basis_vec(F, 2, 0);
  std::vector<Vec> pm = {vec_zero(F, 2), basis_vec(F, 2, 1)};
  return LiePAlgebra::make(F, 2, {"x", "y"}, bm, pm, "nonabelian2");
}

Fel sl2_quadratic_form(const Field& F, const Vec& x) {
  // q(ae + bh + cf) = b^2 + ac
  return F.add(F.mul(x[1], x[1]), F.mul(x[0], x[2]));
}

}  // namespace

TEST_CASE("torus detection") {
  CHECK(is_torus(make_torus(3, 2)));
  CHECK(is_torus(make_torus(2, 3)));
  CHECK_FALSE(is_torus(make_nil(3, 1)));
  CHECK_FALSE(is_torus(make_heisenberg(2)));
  CHECK_FALSE(is_torus(make_sl2(3)));

  // abelian with a permutation p-map is still a torus
  Field F = Field::make(2, 1);
  std::vector<Vec> pm = {basis_vec(F, 2, 1), basis_vec(F, 2, 0)};
  LiePAlgebra swap = LiePAlgebra::make(F, 2, {}, {}, pm, "swap");
  CHECK(is_torus(swap));
}

TEST_CASE("almost periodicity of sl2 over GF(3)") {
  LiePAlgebra L = make_sl2(3);
  const Field& F = L.field();
  AlmostPeriodicReport rep = almost_periodicity(L);
  REQUIRE(rep.holds);
  CHECK(rep.n_used == 1);
  // lambda on the basis: e -> 0, h -> 1, f -> 0
  for (const auto& [label, lam] : rep.lambda_table) {
    if (label == "e" || label == "f") CHECK(F.is_zero(lam));
    if (label == "h") CHECK(F.is_one(lam));
  }
  // oracle: x^{[3]} = q(x) x with q(ae+bh+cf) = b^2 + ac
  std::mt19937_64 rng(0);
  for (int t = 0; t < 50; ++t) {
    Vec x = vec_zero(F, 3);
    for (auto& c : x) c = F.element(rng() % 3);
    CHECK(p_power(L, x) == vec_scale(F, sl2_quadratic_form(F, x), x));
  }
}

TEST_CASE("almost periodicity of tori and of the nonabelian 2-dim algebra") {
  LiePAlgebra T = make_torus(3, 2);
  AlmostPeriodicReport rt = almost_periodicity(T);
  REQUIRE(rt.holds);
  CHECK(rt.n_used == 1);
  for (const auto& [label, lam] : rt.lambda_table) CHECK(T.field().is_one(lam));

  LiePAlgebra L = make_nonabelian2(2);
  const Field& F = L.field();
  AlmostPeriodicReport rn = almost_periodicity(L);
  REQUIRE(rn.holds);
  CHECK(rn.n_used == 1);
  CHECK(p_power(L, Vec{F.one(), F.one()}) == Vec{F.one(), F.one()});  // lambda(x+y) = 1
}

TEST_CASE("heisenberg is almost periodic with n = 2 and lambda = 0") {
  // all iterated p-powers vanish: x^{[2]} = ab z, z^{[2]} = 0
  LiePAlgebra H = make_heisenberg(2);
  AlmostPeriodicReport rep = almost_periodicity(H);
  REQUIRE(rep.holds);
  CHECK(rep.n_used == 2);
  for (const auto& [label, lam] : rep.lambda_table) CHECK(H.field().is_zero(lam));
}

TEST_CASE("an algebra that is not almost periodic") {
  // abelian with e1 -> e2 -> e2: iterates of e1 stay outside span{e1}
  Field F = Field::make(2, 1);
  std::vector<Vec> pm = {basis_vec(F, 2, 1), basis_vec(F, 2, 1)};
  LiePAlgebra L = LiePAlgebra::make(F, 2, {}, {}, pm, "shift");
  AlmostPeriodicReport rep = almost_periodicity(L);
  CHECK_FALSE(rep.holds);
  REQUIRE(rep.failure_witness.has_value());
  const auto& [x, it] = *rep.failure_witness;
  CHECK_FALSE(vec_is_zero(F, it));
}

TEST_CASE("phi for sl2 with the pair (h, e+f)") {
  LiePAlgebra L = make_sl2(3);
  const Field& F = L.field();
  Vec h = basis_vec(F, 3, 1);
  Vec ef = vec_add(F, basis_vec(F, 3, 0), basis_vec(F, 3, 2));
  PhiResult r = phi_polynomial(L, h, ef, 1);
  REQUIRE(r.ok);
  CHECK(poly_eq(r.phi, poly_from_ints(F, {1, 0, 1})));  // 1 + t^2
  CHECK(r.phi.c[0] == F.one());  // free term = lambda(h)
  CHECK_THROWS_AS(phi_polynomial(L, h, vec_scale(F, F.from_int(2), h), 1), DependentPair);
}

TEST_CASE("phi for the nonabelian 2-dim algebra over GF(2)") {
  LiePAlgebra L = make_nonabelian2(2);
  const Field& F = L.field();
  PhiResult r = phi_polynomial(L, basis_vec(F, 2, 0), basis_vec(F, 2, 1), 1);
  REQUIRE(r.ok);
  CHECK(poly_eq(r.phi, poly_from_ints(F, {0, 1})));  // phi = t
}

TEST_CASE("phi fails on a torus pair with a witness outside the prime field") {
  LiePAlgebra T = make_torus(3, 2);
  const Field& F = T.field();
  PhiResult r = phi_polynomial(T, basis_vec(F, 2, 0), basis_vec(F, 2, 1), 1);
  REQUIRE_FALSE(r.ok);
  REQUIRE(r.failure_t0.has_value());
  const Field& E = r.eval_field;
  CHECK(E.size() == 9);
  CHECK_FALSE(E.frobenius(*r.failure_t0, 1) == *r.failure_t0);  // not in GF(3)
}

TEST_CASE("phi free term equals lambda on random sl2 pairs") {
  LiePAlgebra L = make_sl2(3);
  const Field& F = L.field();
  std::mt19937_64 rng(1);
  int tested = 0;
  while (tested < 20) {
    Vec x = vec_zero(F, 3), y = vec_zero(F, 3);
    for (auto& c : x) c = F.element(rng() % 3);
    for (auto& c : y) c = F.element(rng() % 3);
    RowSpan span(F, 3);
    if (!span.add(x) || !span.add(y)) continue;
    ++tested;
    PhiResult r = phi_polynomial(L, x, y, 1);
    REQUIRE(r.ok);
    Fel free_term = r.phi.is_zero() ? F.zero() : r.phi.c[0];
    CHECK(free_term == sl2_quadratic_form(F, x));
  }
}

TEST_CASE("p-nilpotent search on sl2: basis scan") {
  LiePAlgebra L = make_sl2(3);
  const Field& F = L.field();
  NilpotentSearchResult r = find_p_nilpotent(L);
  REQUIRE(r.found);
  CHECK(r.element == basis_vec(F, 3, 0));  // e
  CHECK(r.nilpotency_steps == 1);
  CHECK(r.extension_degree == 1);
}

TEST_CASE("p-nilpotent search on sl2 via phi roots in GF(9)") {
  LiePAlgebra L = make_sl2(3);
  const Field& F = L.field();
  NilpotentSearchOptions opts;
  opts.basis_scan = false;
  Vec h = basis_vec(F, 3, 1);
  Vec ef = vec_add(F, basis_vec(F, 3, 0), basis_vec(F, 3, 2));
  opts.forced_pair = {{h, ef}};
  NilpotentSearchResult r = find_p_nilpotent(L, opts);
  REQUIRE(r.found);
  CHECK(r.extension_degree == 2);
  CHECK(r.ext_field.size() == 9);
  CHECK(r.nilpotency_steps <= 2);
  REQUIRE(r.phi.has_value());
  CHECK(poly_eq(*r.phi, poly_from_ints(F, {1, 0, 1})));
  // verify in the extension: element != 0 and its p-power iterate vanishes
  const Field& E = r.ext_field;
  LiePAlgebra LE = L.base_change(E);
  CHECK_FALSE(vec_is_zero(E, r.element));
  CHECK(vec_is_zero(E, p_power_iter(LE, r.element, r.nilpotency_steps)));
  // the root satisfies 1 + xi^2 = 0: the element is h + xi(e+f) with xi^2 = -1
  Fel xi = r.element[0];  // e-coordinate
  CHECK(E.add(E.one(), E.mul(xi, xi)) == E.zero());
}

TEST_CASE("no p-nilpotent element in a torus; every lambda is 1") {
  LiePAlgebra T = make_torus(3, 2);
  NilpotentSearchResult r = find_p_nilpotent(T);
  CHECK_FALSE(r.found);
  REQUIRE(r.periodicity.has_value());
  for (const auto& [label, lam] : r.periodicity->lambda_table)
    CHECK(T.field().is_one(lam));
  CHECK_FALSE(r.attempts.empty());
}

TEST_CASE("verified nilpotence for every successful search") {
  std::mt19937_64 rng(2);
  for (auto L : {make_sl2(3), make_heisenberg(2), make_nil(2, 2), make_nonabelian2(3)}) {
    NilpotentSearchResult r = find_p_nilpotent(L);
    REQUIRE(r.found);
    const Field& E = r.ext_field;
    LiePAlgebra LE = (E == L.field()) ? L : L.base_change(E);
    CHECK_FALSE(vec_is_zero(E, r.element));
    CHECK(vec_is_zero(E, p_power_iter(LE, r.element, r.nilpotency_steps)));
  }
}

TEST_CASE("two-dimensional subalgebra search") {
  LiePAlgebra L = make_sl2(3);
  const Field& F = L.field();
  SubalgebraPairResult r = find_2dim_subalgebra(L);
  REQUIRE(r.found);
  CHECK(r.exhaustive);
  RowSpan span(F, 3);
  CHECK(span.add(r.a));
  CHECK(span.add(r.b));
  CHECK(span.contains(bracket(L, r.a, r.b)));

  LiePAlgebra A = make_nil(3, 2);
  SubalgebraPairResult ra = find_2dim_subalgebra(A);
  CHECK(ra.found);

  LiePAlgebra one = make_nil(2, 1);
  SubalgebraPairResult r1 = find_2dim_subalgebra(one);
  CHECK_FALSE(r1.found);
  CHECK(r1.exhaustive);

  // randomized mode is reported as inconclusive when nothing is found
  SubalgebraPairResult rr = find_2dim_subalgebra(L, SearchMode::Randomized, 0, 0);
  CHECK_FALSE(rr.found);
  CHECK_FALSE(rr.exhaustive);
}

TEST_CASE("ad descent witness") {
  LiePAlgebra A = make_nil(3, 2);
  const Field& Fa = A.field();
  DependenceReport ra = ad_descent_witness(A, basis_vec(Fa, 2, 0), basis_vec(Fa, 2, 1));
  CHECK(ra.ad_nilpotency_index == 1);
  CHECK(ra.steps.empty());
  CHECK(ra.bracket_zero);
  CHECK_FALSE(ra.dependent);

  LiePAlgebra L = make_sl2(3);
  const Field& F = L.field();
  DependenceReport r = ad_descent_witness(L, basis_vec(F, 3, 0), basis_vec(F, 3, 2));
  CHECK(r.ad_nilpotency_index == 3);
  REQUIRE(r.steps.size() == 2);
  // (ad e)^2 f = -2e lies in span{e} with a nonzero coefficient
  CHECK(r.steps[0].k == 2);
  CHECK(r.steps[0].in_span_x);
  CHECK_FALSE(r.steps[0].lambda_zero);
  CHECK(r.steps[0].lambda == F.from_int(-2));
  // (ad e)^1 f = h is not proportional to e
  CHECK(r.steps[1].k == 1);
  CHECK_FALSE(r.steps[1].in_span_x);
  CHECK_FALSE(r.bracket_zero);
  CHECK_FALSE(r.dependent);

  DependenceReport same = ad_descent_witness(L, basis_vec(F, 3, 0), basis_vec(F, 3, 0));
  CHECK(same.ad_nilpotency_index == 1);
  CHECK(same.dependent);

  CHECK_THROWS_AS(ad_descent_witness(L, basis_vec(F, 3, 1), basis_vec(F, 3, 0)),
                  NotAdNilpotent);
}

TEST_CASE("descent reports are internally consistent on random pairs") {
  // heisenberg: ad x is nilpotent for every x, so every pair descends
  LiePAlgebra H = make_heisenberg(3);
  const Field& F = H.field();
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    Vec x = vec_zero(F, 3), y = vec_zero(F, 3);
    for (auto& c : x) c = F.element(rng() % 3);
    for (auto& c : y) c = F.element(rng() % 3);
    DependenceReport r = ad_descent_witness(H, x, y);
    CHECK(r.bracket_zero == (r.ad_nilpotency_index <= 1));
    for (const auto& step : r.steps) {
      Vec w = y;
      for (int i = 0; i < step.k; ++i) w = bracket(H, x, w);
      if (step.in_span_x) {
        CHECK(w == vec_scale(F, step.lambda, x));
        CHECK(step.lambda_zero == F.is_zero(step.lambda));
      }
    }
  }
}

TEST_CASE("nilpotent part candidates") {
  LiePAlgebra L = make_sl2(3);
  const Field& F = L.field();
  // h is p-semisimple: no nilpotent part
  CHECK(nilpotent_part_candidates(L, basis_vec(F, 3, 1)).empty());
  // e is p-nilpotent: it is its own nilpotent part
  auto ne = nilpotent_part_candidates(L, basis_vec(F, 3, 0));
  REQUIRE(ne.size() == 1);
  CHECK(vec_is_zero(F, p_power_iter(L, ne[0], 3)));
}

TEST_CASE("cd* classification of tori") {
  CdStarClassification c = cd_star_classify(make_torus(3, 2));
  CHECK(c.verdict == CdVerdict::Zero);
  REQUIRE(c.ext_dims_checked.size() == 7);
  for (int n = 1; n <= 6; ++n) CHECK(c.ext_dims_checked[static_cast<size_t>(n)] == 0);
}

TEST_CASE("cd* classification of heisenberg over GF(2)") {
  LiePAlgebra H = make_heisenberg(2);
  const Field& F = H.field();
  CdStarClassification c = cd_star_classify(H);
  CHECK(c.verdict == CdVerdict::InfiniteEvidence);
  REQUIRE(c.witness_x.has_value());
  CHECK(*c.witness_x == basis_vec(F, 3, 0));  // basis element e
  REQUIRE(c.witness_f.has_value());
  CHECK(poly_eq(*c.witness_f, poly_from_ints(F, {0, 0, 1})));  // t^2
  REQUIRE(c.holm_dims.size() == 7);
  for (int n = 0; n <= 6; ++n) CHECK(c.holm_dims[static_cast<size_t>(n)] == 2);
  // Ext over u((e)_p) = K[t]/(t^2) is 1 in every degree
  REQUIRE(c.witness_sub_ext_dims.size() == 7);
  for (int n = 1; n <= 6; ++n) CHECK(c.witness_sub_ext_dims[static_cast<size_t>(n)] == 1);
}

TEST_CASE("cd* classification of sl2 over GF(3)") {
  LiePAlgebra L = make_sl2(3);
  const Field& F = L.field();
  CdStarClassification c = cd_star_classify(L);
  CHECK(c.verdict == CdVerdict::InfiniteEvidence);
  CHECK(*c.witness_x == basis_vec(F, 3, 0));
  CHECK(poly_eq(*c.witness_f, poly_from_ints(F, {0, 0, 0, 1})));  // t^3
  for (int n = 0; n <= 6; ++n) CHECK(c.holm_dims[static_cast<size_t>(n)] == 3);
  // ambient restricted cohomology was computed and is not identically zero
  REQUIRE(c.ext_dims_checked.size() == 7);
  bool some_nonzero = false;
  for (int n = 1; n <= 6; ++n)
    if (c.ext_dims_checked[static_cast<size_t>(n)] > 0) some_nonzero = true;
  CHECK(some_nonzero);
}

TEST_CASE("cd* witness search survives a semisimple basis presentation") {
  // sl2 in the basis (h, e+f, e-f): every basis element is p-semisimple, so
  // the witness has to come from a random candidate's nilpotent part
  Field F = Field::make(3, 1);
  // [h, e+f] = 2e - 2f = 2(e-f); [h, e-f] = 2e + 2f = 2(e+f); [e+f, e-f] = -2h
  BracketMap bm;
  bm[{0, 1}] = Vec{F.zero(), F.zero(), F.from_int(2)};
  bm[{0, 2}] = Vec{F.zero(), F.from_int(2), F.zero()};
  bm[{1, 2}] = Vec{F.from_int(-2), F.zero(), F.zero()};
  // (e+f)^{[3]} = e+f, (e-f)^{[3]} = -(e-f)
  std::vector<Vec> pm = {basis_vec(F, 3, 0), basis_vec(F, 3, 1),
                         vec_scale(F, F.from_int(-1), basis_vec(F, 3, 2))};
  LiePAlgebra L = LiePAlgebra::make(F, 3, {"h", "s", "d"}, bm, pm, "sl2-semisimple-basis");
  CdStarClassification c = cd_star_classify(L);
  CHECK(c.verdict == CdVerdict::InfiniteEvidence);
  REQUIRE(c.witness_x.has_value());
  Poly f = *c.witness_f;
  CHECK(F.is_zero(f.c[1]));
  CHECK(poly_derivative(F, f).is_zero());
}

TEST_CASE("subalgebra consistency") {
  SubConsistencyReport t = subalgebra_cdstar_consistency(make_torus(3, 3), 50, 0);
  CHECK(t.ambient_is_torus);
  CHECK(t.consistent);
  for (const auto& row : t.rows) CHECK(row.sub_is_torus);

  SubConsistencyReport s = subalgebra_cdstar_consistency(make_sl2(3), 30, 0);
  CHECK(s.consistent);
  REQUIRE(s.ambient_verdict.has_value());
  CHECK(*s.ambient_verdict == CdVerdict::InfiniteEvidence);

  SubConsistencyReport h = subalgebra_cdstar_consistency(make_heisenberg(2), 30, 0);
  CHECK(h.consistent);
}
