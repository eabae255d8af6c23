#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liepcd/gf.hpp"

using namespace liepcd;

namespace {

Fel random_fel(const Field& F, std::mt19937_64& rng) {
  return F.element(rng() % F.size());
}

Poly random_poly(const Field& F, int max_deg, std::mt19937_64& rng) {
  std::vector<Fel> c;
  int d = static_cast<int>(rng() % static_cast<uint64_t>(max_deg + 1));
  for (int i = 0; i <= d; ++i) c.push_back(random_fel(F, rng));
  return poly_make(F, std::move(c));
}

}  // namespace

TEST_CASE("prime field basics") {
  Field F2 = Field::make(2, 1);
  CHECK(F2.is_zero(F2.add(F2.one(), F2.one())));

  Field F5 = Field::make(5, 1);
  CHECK(F5.inv(F5.from_int(2)) == F5.from_int(3));

  CHECK_THROWS_AS(Field::make(4, 1), CompositeP);
  CHECK_THROWS_AS(Field::make(1, 1), CompositeP);
  CHECK_THROWS_AS(Field::make(3, 13), DegreeTooLarge);
  CHECK_THROWS_AS(Field::make(3, 0), DegreeTooLarge);
}

TEST_CASE("extension field GF(9)") {
  Field F9 = Field::make(3, 2);
  CHECK(F9.size() == 9);
  // smallest irreducible quadratic over GF(3) is t^2 + 1
  CHECK(F9.modulus() == std::vector<int64_t>{1, 0, 1});
  // multiplicative order divides 8
  for (uint64_t i = 1; i < 9; ++i) {
    Fel a = F9.element(i);
    CHECK(F9.is_one(F9.pow(a, 8)));
    CHECK(F9.is_one(F9.mul(a, F9.inv(a))));
  }
}

TEST_CASE("deterministic moduli") {
  CHECK(Field::make(2, 2).modulus() == std::vector<int64_t>{1, 1, 1});
  CHECK(Field::make(2, 3).modulus() == std::vector<int64_t>{1, 1, 0, 1});
  CHECK(Field::make(2, 1).modulus() == std::vector<int64_t>{0, 1});
}

TEST_CASE("field axioms on seeded random triples") {
  for (const Field& F : {Field::make(2, 3), Field::make(3, 2), Field::make(5, 1)}) {
    std::mt19937_64 rng(0);
    for (int trial = 0; trial < 1000; ++trial) {
      Fel a = random_fel(F, rng), b = random_fel(F, rng), c = random_fel(F, rng);
      CHECK(F.add(a, F.add(b, c)) == F.add(F.add(a, b), c));
      CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.add(a, F.neg(a)) == F.zero());
      if (!F.is_zero(a)) CHECK(F.is_one(F.mul(a, F.inv(a))));
    }
  }
}

TEST_CASE("frobenius and enumeration") {
  Field F = Field::make(3, 2);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    Fel a = random_fel(F, rng);
    CHECK(F.frobenius(a) == F.pow(a, 3));
    CHECK(F.element(F.index_of(a)) == a);
  }
  // frobenius is additive
  Fel a = F.element(5), b = F.element(7);
  CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
}

TEST_CASE("divmod identity on random pairs") {
  Field F = Field::make(3, 2);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    Poly f = random_poly(F, 8, rng);
    Poly g = random_poly(F, 5, rng);
    if (g.is_zero()) continue;
    Poly q, r;
    poly_divmod(F, f, g, &q, &r);
    CHECK(poly_eq(poly_add(F, poly_mul(F, q, g), r), f));
    CHECK(r.deg() < g.deg());
  }
}

TEST_CASE("factorization multiplies back") {
  for (const Field& F : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2)}) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 60; ++t) {
      Poly f = random_poly(F, 7, rng);
      if (f.deg() < 1) continue;
      auto factors = poly_factorize(F, f);
      Poly prod = poly_const(F, F.one());
      for (const auto& [g, mult] : factors) {
        CHECK(poly_is_irreducible(F, g));
        for (int i = 0; i < mult; ++i) prod = poly_mul(F, prod, g);
      }
      CHECK(poly_eq(prod, poly_monic(F, f)));
    }
  }
}

TEST_CASE("roots t^2 - t over GF(3)") {
  Field F = Field::make(3, 1);
  Poly f = poly_from_ints(F, {0, -1, 1});  // t^2 - t
  auto roots = poly_roots_in_extension(F, f, 1);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].ext_degree == 1);
  CHECK(roots[1].ext_degree == 1);
  CHECK(roots[0].root == F.from_int(0));
  CHECK(roots[1].root == F.from_int(1));
}

TEST_CASE("roots t^p - t over GF(p) are the whole prime field") {
  for (int64_t p : {2, 3, 5}) {
    Field F = Field::make(p, 1);
    std::vector<Fel> c(static_cast<size_t>(p) + 1, F.zero());
    c[1] = F.neg(F.one());
    c[static_cast<size_t>(p)] = F.one();
    auto roots = poly_roots_in_extension(F, poly_make(F, std::move(c)), 1);
    REQUIRE(roots.size() == static_cast<size_t>(p));
    for (int64_t a = 0; a < p; ++a) CHECK(roots[static_cast<size_t>(a)].root == F.from_int(a));
  }
}

TEST_CASE("roots of 1 + t^2 over GF(3) live in GF(9)") {
  Field F = Field::make(3, 1);
  Poly f = poly_from_ints(F, {1, 0, 1});
  auto roots = poly_roots_in_extension(F, f, 2);
  REQUIRE(roots.size() == 2);
  // oracle: exhaustive evaluation over all 9 elements of GF(9)
  Field F9 = roots[0].ext;
  Poly f9 = Embedding(F, F9).map_poly(f);
  std::vector<Fel> expected;
  for (uint64_t i = 0; i < 9; ++i) {
    Fel a = F9.element(i);
    if (F9.is_zero(poly_eval(F9, f9, a))) expected.push_back(a);
  }
  REQUIRE(expected.size() == 2);
  for (size_t i = 0; i < 2; ++i) {
    CHECK(roots[i].ext_degree == 2);
    CHECK(roots[i].root == expected[i]);
    CHECK(F9.is_zero(poly_eval(F9, f9, roots[i].root)));
  }
  CHECK_THROWS_AS(poly_roots_in_extension(F, Poly{}, 2), ZeroPolynomial);
}

TEST_CASE("interpolation") {
  Field F = Field::make(3, 1);
  // hand Lagrange through (0,1),(1,0),(2,0): 2t^2 + 1
  Poly f = interpolate(F, {{F.from_int(0), F.from_int(1)},
                           {F.from_int(1), F.from_int(0)},
                           {F.from_int(2), F.from_int(0)}});
  CHECK(poly_eq(f, poly_from_ints(F, {1, 0, 2})));
  CHECK(poly_eval(F, f, F.from_int(0)) == F.from_int(1));
  CHECK(poly_eval(F, f, F.from_int(1)) == F.from_int(0));
  CHECK(poly_eval(F, f, F.from_int(2)) == F.from_int(0));

  // single point -> constant
  Poly g = interpolate(F, {{F.from_int(2), F.from_int(2)}});
  CHECK(g.deg() == 0);

  // collinear points over GF(5) -> degree <= 1
  Field F5 = Field::make(5, 1);
  Poly line = interpolate(F5, {{F5.from_int(0), F5.from_int(1)},
                               {F5.from_int(1), F5.from_int(3)},
                               {F5.from_int(2), F5.from_int(0)}});
  CHECK(line.deg() <= 1);

  CHECK_THROWS_AS(interpolate(F, {{F.from_int(1), F.from_int(0)},
                                  {F.from_int(1), F.from_int(2)}}),
                  DuplicateAbscissa);
}

TEST_CASE("interpolate inverts evaluation") {
  Field F = Field::make(5, 1);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    Poly f = random_poly(F, 4, rng);
    std::vector<std::pair<Fel, Fel>> pts;
    for (int64_t a = 0; a < 5; ++a)
      pts.push_back({F.from_int(a), poly_eval(F, f, F.from_int(a))});
    CHECK(poly_eq(interpolate(F, pts), f));
  }
}

TEST_CASE("embedding GF(4) -> GF(16)") {
  Field F4 = Field::make(2, 2);
  Field F16 = Field::make(2, 4);
  Embedding emb(F4, F16);
  for (uint64_t i = 0; i < 4; ++i)
    for (uint64_t j = 0; j < 4; ++j) {
      Fel a = F4.element(i), b = F4.element(j);
      CHECK(emb.map(F4.mul(a, b)) == F16.mul(emb.map(a), emb.map(b)));
      CHECK(emb.map(F4.add(a, b)) == F16.add(emb.map(a), emb.map(b)));
      auto back = emb.preimage(emb.map(a));
      REQUIRE(back.has_value());
      CHECK(*back == a);
    }
  CHECK(emb.map(F4.one()) == F16.one());
  // an element outside the image has no preimage
  int outside = 0;
  for (uint64_t i = 0; i < 16; ++i)
    if (!emb.preimage(F16.element(i)).has_value()) ++outside;
  CHECK(outside == 12);
}

TEST_CASE("embedding of the prime field is the constant inclusion") {
  Field F3 = Field::make(3, 1);
  Field F9 = Field::make(3, 2);
  Embedding emb(F3, F9);
  for (int64_t a = 0; a < 3; ++a) {
    Fel img = emb.map(F3.from_int(a));
    CHECK(img == F9.from_int(a));
  }
  CHECK_THROWS_AS(Embedding(Field::make(2, 2), Field::make(2, 3)), FieldMismatch);
}
