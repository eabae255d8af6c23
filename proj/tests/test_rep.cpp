#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liepcd/rep.hpp"

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

LiePAlgebra make_nonabelian2(int64_t p) {
  Field F = Field::make(p, 1);
  BracketMap bm;
  bm[{0, 1}] = basis_vec(F, 2, 0);  // [x,y] = x
  std::vector<Vec> pm = {vec_zero(F, 2), basis_vec(F, 2, 1)};
  return LiePAlgebra::make(F, 2, {"x", "y"}, bm, pm, "nonabelian2");
}

}  // namespace

TEST_CASE("trivial module is valid and restricted") {
  for (auto L : {make_sl2(3), make_heisenberg(2)}) {
    RestrictedModule K = trivial_module(L);
    CHECK(K.dim() == 1);
    CHECK(K.restricted());
    for (int i = 0; i < L.dim(); ++i) CHECK(K.rho_basis(i).is_zero());
  }
}

TEST_CASE("adjoint module of sl2 over GF(3)") {
  LiePAlgebra L = make_sl2(3);
  RestrictedModule ad = adjoint_module(L);
  CHECK(ad.restricted());
  // rho(h^{[3]}) = rho(h)^3
  CHECK(ad.rho(L.pmap_basis(1)) == ad.rho_basis(1).pow(3));
}

TEST_CASE("adjoint module of heisenberg over GF(2) is restricted") {
  LiePAlgebra H = make_heisenberg(2);
  RestrictedModule ad = adjoint_module(H);
  CHECK(ad.restricted());
  for (int i = 0; i < 3; ++i) CHECK(ad.rho_basis(i).pow(2).is_zero());
}

TEST_CASE("the one-dimensional Kv module on the nonabelian 2-dim algebra") {
  LiePAlgebra L = make_nonabelian2(3);
  const Field& F = L.field();
  Matrix rx(F, 1, 1), ry(F, 1, 1);
  ry.set(0, 0, F.from_int(-1));
  RestrictedModule Kv = RestrictedModule::make(L, {rx, ry}, false);
  CHECK(Kv.restricted());  // rho(y^{[p]}) = rho(y) = -1 = (-1)^p
}

TEST_CASE("bad module data is rejected with a witness") {
  LiePAlgebra L = make_nonabelian2(3);
  const Field& F = L.field();
  // rho(x) = 1, rho(y) = 0 violates rho([x,y]) = rho(x)
  Matrix rx(F, 1, 1), ry(F, 1, 1);
  rx.set(0, 0, F.one());
  CHECK_THROWS_AS(RestrictedModule::make(L, {rx, ry}, false), ModuleAxiomViolation);
}

TEST_CASE("non-restricted modules are allowed unless required") {
  Field F = Field::make(2, 1);
  LiePAlgebra N = LiePAlgebra::make(F, 1, {"x"}, {}, {vec_zero(F, 1)}, "nil1");
  Matrix r(F, 1, 1);
  r.set(0, 0, F.one());
  RestrictedModule M = RestrictedModule::make(N, {r}, false);
  CHECK_FALSE(M.restricted());  // rho(x^{[2]}) = 0 but rho(x)^2 = 1
  CHECK_THROWS_AS(RestrictedModule::make(N, {r}, true), ModuleAxiomViolation);
}

TEST_CASE("double dual restores the action matrices") {
  LiePAlgebra L = make_sl2(3);
  RestrictedModule ad = adjoint_module(L);
  RestrictedModule dd = dual_module(dual_module(ad));
  for (int i = 0; i < L.dim(); ++i) CHECK(dd.rho_basis(i) == ad.rho_basis(i));
  // dual of trivial = trivial
  RestrictedModule K = trivial_module(L);
  RestrictedModule Kd = dual_module(K);
  for (int i = 0; i < L.dim(); ++i) CHECK(Kd.rho_basis(i).is_zero());
}

TEST_CASE("restricted modules satisfy rho(x^{[p]}) = rho(x)^p on random elements") {
  std::mt19937_64 rng(0);
  for (auto L : {make_sl2(3), make_heisenberg(2)}) {
    const Field& F = L.field();
    RestrictedModule M = adjoint_module(L);
    REQUIRE(M.restricted());
    for (int t = 0; t < 50; ++t) {
      Vec x = vec_zero(F, L.dim());
      for (auto& c : x) c = F.element(rng() % F.size());
      CHECK(M.rho(p_power(L, x)) == M.rho(x).pow(static_cast<int>(F.p())));
    }
  }
}
