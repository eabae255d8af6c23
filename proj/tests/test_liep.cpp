#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liepcd/liep.hpp"

using namespace liepcd;

namespace {

// sl2 over GF(p), p > 2: basis (e, h, f), [h,e] = 2e, [h,f] = -2f, [e,f] = h,
// e^{[p]} = f^{[p]} = 0, h^{[p]} = h.
LiePAlgebra make_sl2(int64_t p) {
  Field F = Field::make(p, 1);
  BracketMap bm;
  bm[{0, 1}] = Vec{F.from_int(-2), F.zero(), F.zero()};  // [e,h] = -2e
  bm[{0, 2}] = Vec{F.zero(), F.one(), F.zero()};         // [e,f] = h
  bm[{1, 2}] = Vec{F.zero(), F.zero(), F.from_int(-2)};  // [h,f] = -2f
  std::vector<Vec> pm = {vec_zero(F, 3), basis_vec(F, 3, 1), vec_zero(F, 3)};
  return LiePAlgebra::make(F, 3, {"e", "h", "f"}, bm, pm, "sl2");
}

// Heisenberg: (e, f, z), [e,f] = z, all basis p-powers zero.
LiePAlgebra make_heisenberg(int64_t p) {
  Field F = Field::make(p, 1);
  BracketMap bm;
  bm[{0, 1}] = basis_vec(F, 3, 2);
  std::vector<Vec> pm(3, vec_zero(F, 3));
  return LiePAlgebra::make(F, 3, {"e", "f", "z"}, bm, pm, "heisenberg");
}

LiePAlgebra make_abelian(int64_t p, int d) {
  Field F = Field::make(p, 1);
  return LiePAlgebra::make(F, d, {}, {}, std::vector<Vec>(static_cast<size_t>(d), vec_zero(F, d)),
                           "abelian");
}

LiePAlgebra make_torus(int64_t p, int d) {
  Field F = Field::make(p, 1);
  std::vector<Vec> pm;
  for (int i = 0; i < d; ++i) pm.push_back(basis_vec(F, d, i));
  return LiePAlgebra::make(F, d, {}, {}, pm, "torus");
}

Vec random_elt(const LiePAlgebra& L, std::mt19937_64& rng) {
  Vec v = vec_zero(L.field(), L.dim());
  for (auto& c : v) c = L.field().element(rng() % L.field().size());
  return v;
}

// 2x2 matrix cube over GF(3), the defining representation oracle for sl2
std::vector<int64_t> cube2x2_gf3(const std::vector<int64_t>& m) {
  auto mul = [](const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
    std::vector<int64_t> c(4);
    c[0] = ((a[0] * b[0] + a[1] * b[2]) % 3 + 3) % 3;
    c[1] = ((a[0] * b[1] + a[1] * b[3]) % 3 + 3) % 3;
    c[2] = ((a[2] * b[0] + a[3] * b[2]) % 3 + 3) % 3;
    c[3] = ((a[2] * b[1] + a[3] * b[3]) % 3 + 3) % 3;
    return c;
  };
  return mul(m, mul(m, m));
}

}  // namespace

TEST_CASE("sl2 over GF(3) validates; a broken bracket table does not") {
  LiePAlgebra L = make_sl2(3);
  CHECK(verify_axioms(L).ok());

  // same data with [e,f] = e: Jacobi fails on (e,h,f)
  Field F = L.field();
  BracketMap bm;
  bm[{0, 1}] = Vec{F.from_int(-2), F.zero(), F.zero()};
  bm[{0, 2}] = basis_vec(F, 3, 0);
  bm[{1, 2}] = Vec{F.zero(), F.zero(), F.from_int(-2)};
  std::vector<Vec> pm = {vec_zero(F, 3), basis_vec(F, 3, 1), vec_zero(F, 3)};
  CHECK_THROWS_AS(LiePAlgebra::make(F, 3, {"e", "h", "f"}, bm, pm), AxiomViolation);
}

TEST_CASE("heisenberg over GF(2) validates") {
  LiePAlgebra H = make_heisenberg(2);
  CHECK(verify_axioms(H).ok());
  // (ad e)^2 = 0 makes the zero p-map compatible
  CHECK(adjoint_matrix(H, basis_vec(H.field(), 3, 0)).pow(2).is_zero());
}

TEST_CASE("bracket") {
  LiePAlgebra L = make_sl2(3);
  const Field& F = L.field();
  std::mt19937_64 rng(0);
  for (int t = 0; t < 20; ++t) {
    Vec x = random_elt(L, rng);
    CHECK(vec_is_zero(F, bracket(L, x, x)));
  }
  // [h, e] = 2e
  Vec he = bracket(L, basis_vec(F, 3, 1), basis_vec(F, 3, 0));
  CHECK(he == vec_scale(F, F.from_int(2), basis_vec(F, 3, 0)));

  LiePAlgebra A = make_abelian(3, 3);
  for (int t = 0; t < 20; ++t)
    CHECK(vec_is_zero(A.field(), bracket(A, random_elt(A, rng), random_elt(A, rng))));
}

TEST_CASE("p-powers in sl2 over GF(3) match 2x2 matrix cubes") {
  LiePAlgebra L = make_sl2(3);
  const Field& F = L.field();
  CHECK(vec_is_zero(F, p_power(L, basis_vec(F, 3, 0))));       // e^{[3]} = 0
  CHECK(p_power(L, basis_vec(F, 3, 1)) == basis_vec(F, 3, 1)); // h^{[3]} = h

  // e + f corresponds to [[0,1],[1,0]]; its cube is itself
  Vec ef = vec_add(F, basis_vec(F, 3, 0), basis_vec(F, 3, 2));
  CHECK(p_power(L, ef) == ef);
  CHECK(cube2x2_gf3({0, 1, 1, 0}) == std::vector<int64_t>{0, 1, 1, 0});

  // general oracle: x = ae + bh + cf <-> [[b, a], [c, -b]]; cube and compare
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    Vec x = random_elt(L, rng);
    int64_t a = x[0][0], b = x[1][0], c = x[2][0];
    auto m3 = cube2x2_gf3({b, a, c, (3 - b) % 3});
    Vec expect = {Fel{m3[1]}, Fel{m3[0]}, Fel{m3[2]}};
    CHECK(p_power(L, x) == expect);
  }
}

TEST_CASE("p_power on abelian algebras is coordinatewise") {
  LiePAlgebra T = make_torus(3, 2);
  const Field& F = T.field();
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    Vec x = random_elt(T, rng);
    Vec expect = vec_zero(F, 2);
    for (int i = 0; i < 2; ++i)
      expect = vec_add(F, expect,
                       vec_scale(F, F.pow(x[static_cast<size_t>(i)], 3), basis_vec(F, 2, i)));
    CHECK(p_power(T, x) == expect);
  }
}

TEST_CASE("p_power_iter") {
  LiePAlgebra L = make_sl2(3);
  const Field& F = L.field();
  Vec e = basis_vec(F, 3, 0), h = basis_vec(F, 3, 1);
  CHECK(p_power_iter(L, e, 0) == e);
  CHECK(p_power_iter(L, h, 5) == h);
  CHECK(vec_is_zero(F, p_power_iter(L, e, 2)));
}

TEST_CASE("jacobson_s closed forms") {
  // p = 2: s_1(x,y) = [x,y]
  LiePAlgebra H = make_heisenberg(2);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    Vec x = random_elt(H, rng), y = random_elt(H, rng);
    CHECK(jacobson_s(H, 1, x, y) == bracket(H, x, y));
  }
  // p = 3: s_1 = [[x,y],y], s_2 = 2[[x,y],x]
  LiePAlgebra L = make_sl2(3);
  const Field& F = L.field();
  for (int t = 0; t < 30; ++t) {
    Vec x = random_elt(L, rng), y = random_elt(L, rng);
    Vec xy = bracket(L, x, y);
    CHECK(jacobson_s(L, 1, x, y) == bracket(L, xy, y));
    CHECK(jacobson_s(L, 2, x, y) == vec_scale(F, F.from_int(2), bracket(L, xy, x)));
  }
  // abelian: all s_i vanish
  LiePAlgebra A = make_abelian(3, 2);
  for (int t = 0; t < 10; ++t) {
    Vec x = random_elt(A, rng), y = random_elt(A, rng);
    CHECK(vec_is_zero(A.field(), jacobson_s(A, 1, x, y)));
    CHECK(vec_is_zero(A.field(), jacobson_s(A, 2, x, y)));
  }
  CHECK_THROWS_AS(jacobson_s(L, 3, basis_vec(F, 3, 0), basis_vec(F, 3, 1)), InvalidParams);
}

TEST_CASE("adjoint matrices") {
  LiePAlgebra A = make_abelian(2, 3);
  std::mt19937_64 rng(4);
  CHECK(adjoint_matrix(A, random_elt(A, rng)).is_zero());

  LiePAlgebra L = make_sl2(3);
  const Field& F = L.field();
  Matrix adh = adjoint_matrix(L, basis_vec(F, 3, 1));
  Matrix expect(F, 3, 3);
  expect.set(0, 0, F.from_int(2));
  expect.set(2, 2, F.from_int(1));
  CHECK(adh == expect);
  CHECK(adjoint_matrix(L, basis_vec(F, 3, 0)).pow(3).is_zero());
}

TEST_CASE("jacobson identity via two independent routes") {
  std::mt19937_64 rng(5);
  for (auto L : {make_sl2(3), make_heisenberg(2), make_sl2(5), make_torus(3, 3)}) {
    const Field& F = L.field();
    for (int t = 0; t < 200; ++t) {
      Vec x = random_elt(L, rng), y = random_elt(L, rng);
      Vec lhs = p_power(L, vec_add(F, x, y));
      Vec rhs = vec_add(F, p_power(L, x), p_power(L, y));
      for (const Vec& si : jacobson_s_all(L, x, y)) rhs = vec_add(F, rhs, si);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("p-map semilinearity on random scalars") {
  for (auto L : {make_sl2(3), make_heisenberg(2)}) {
    const Field& F = L.field();
    std::mt19937_64 rng(6);
    for (int i = 0; i < L.dim(); ++i)
      for (int t = 0; t < 50; ++t) {
        Fel lam = F.element(rng() % F.size());
        CHECK(p_power(L, vec_scale(F, lam, basis_vec(F, L.dim(), i))) ==
              vec_scale(F, F.pow(lam, static_cast<uint64_t>(F.p())), L.pmap_basis(i)));
      }
  }
}

TEST_CASE("ad of a p-power is the p-th power of ad") {
  std::mt19937_64 rng(7);
  for (auto L : {make_sl2(3), make_heisenberg(2), make_torus(2, 2)}) {
    for (int t = 0; t < 100; ++t) {
      Vec x = random_elt(L, rng);
      CHECK(adjoint_matrix(L, p_power(L, x)) ==
            adjoint_matrix(L, x).pow(static_cast<int>(L.field().p())));
    }
  }
}

TEST_CASE("jacobi identity at random triples") {
  std::mt19937_64 rng(8);
  for (auto L : {make_sl2(3), make_heisenberg(3)}) {
    const Field& F = L.field();
    for (int t = 0; t < 200; ++t) {
      Vec x = random_elt(L, rng), y = random_elt(L, rng), z = random_elt(L, rng);
      Vec J = bracket(L, bracket(L, x, y), z);
      J = vec_add(F, J, bracket(L, bracket(L, y, z), x));
      J = vec_add(F, J, bracket(L, bracket(L, z, x), y));
      CHECK(vec_is_zero(F, J));
    }
  }
}

TEST_CASE("subalgebra closure") {
  LiePAlgebra T = make_torus(3, 2);
  const Field& Ft = T.field();
  auto one = subalgebra_closure(T, {basis_vec(Ft, 2, 0)}, true);
  CHECK(one.size() == 1);

  LiePAlgebra L = make_sl2(3);
  const Field& F = L.field();
  auto full = subalgebra_closure(L, {basis_vec(F, 3, 0), basis_vec(F, 3, 2)}, false);
  CHECK(full.size() == 3);

  LiePAlgebra H = make_heisenberg(2);
  auto e_only = subalgebra_closure(H, {basis_vec(H.field(), 3, 0)}, true);
  CHECK(e_only.size() == 1);
}

TEST_CASE("direct sums") {
  LiePAlgebra T1 = make_torus(2, 1), N1 = make_abelian(2, 1);
  LiePAlgebra S = direct_sum(T1, N1);
  CHECK(S.dim() == 2);
  CHECK(S.is_abelian());
  CHECK(S.pmap_basis(0) == basis_vec(S.field(), 2, 0));
  CHECK(vec_is_zero(S.field(), S.pmap_basis(1)));

  // summing with the zero algebra preserves the tables
  Field F2 = Field::make(2, 1);
  LiePAlgebra zero = LiePAlgebra::make(F2, 0, {}, {}, {}, "0");
  LiePAlgebra H = make_heisenberg(2);
  LiePAlgebra H0 = direct_sum(H, zero);
  CHECK(H0.dim() == 3);
  CHECK(H0.sparse_brackets() == H.sparse_brackets());

  LiePAlgebra HT = direct_sum(H, T1);
  CHECK(HT.dim() == 4);
  CHECK(verify_axioms(HT).ok());

  CHECK_THROWS_AS(direct_sum(make_torus(2, 1), make_torus(3, 1)), FieldMismatch);
}

TEST_CASE("minimal p-polynomials") {
  LiePAlgebra N = make_abelian(3, 1);
  const Field& F = N.field();
  Poly f = minimal_p_polynomial(N, basis_vec(F, 1, 0));
  CHECK(poly_eq(f, poly_from_ints(F, {0, 0, 0, 1})));  // t^3

  LiePAlgebra T = make_torus(3, 1);
  Poly g = minimal_p_polynomial(T, basis_vec(F, 1, 0));
  CHECK(poly_eq(g, poly_from_ints(F, {0, -1, 0, 1})));  // t^3 - t

  LiePAlgebra L = make_sl2(3);
  Poly fe = minimal_p_polynomial(L, basis_vec(F, 3, 0));
  CHECK(poly_eq(fe, poly_from_ints(F, {0, 0, 0, 1})));

  CHECK_THROWS_AS(minimal_p_polynomial(L, vec_zero(F, 3)), ZeroElement);
}

TEST_CASE("minimal p-polynomial annihilates and is minimal") {
  std::mt19937_64 rng(9);
  for (auto L : {make_sl2(3), make_heisenberg(2), make_torus(3, 2)}) {
    const Field& F = L.field();
    for (int t = 0; t < 40; ++t) {
      Vec x = random_elt(L, rng);
      if (vec_is_zero(F, x)) continue;
      Poly f = minimal_p_polynomial(L, x);
      CHECK(vec_is_zero(F, apply_p_polynomial(L, f, x)));
      // no shorter relation: powers x, x^{[p]}, ..., x^{[p]^{m-1}} independent
      int m = 0;
      for (uint64_t pi = 1; static_cast<int>(pi) < static_cast<int>(f.c.size()); pi *= static_cast<uint64_t>(F.p()))
        ++m;
      --m;  // number of powers below the leading one
      Matrix cols(F, L.dim(), m);
      Vec pw = x;
      for (int i = 0; i < m; ++i) {
        for (int r = 0; r < L.dim(); ++r) cols.set(r, i, pw[static_cast<size_t>(r)]);
        pw = p_power(L, pw);
      }
      CHECK(rank_of(cols) == m);
    }
  }
}

TEST_CASE("base change embeds the tables") {
  LiePAlgebra L = make_sl2(3);
  Field F9 = Field::make(3, 2);
  LiePAlgebra L9 = L.base_change(F9);
  CHECK(L9.field() == F9);
  CHECK(L9.dim() == 3);
  CHECK(verify_axioms(L9).ok());
  // bracket of embedded basis elements matches the embedded table
  Vec he = bracket(L9, basis_vec(F9, 3, 1), basis_vec(F9, 3, 0));
  CHECK(he == vec_scale(F9, F9.from_int(2), basis_vec(F9, 3, 0)));
}
