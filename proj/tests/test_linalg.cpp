#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liepcd/linalg.hpp"

using namespace liepcd;

namespace {

Matrix random_matrix(const Field& F, int r, int c, std::mt19937_64& rng) {
  Matrix A(F, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) A.set(i, j, F.element(rng() % F.size()));
  return A;
}

}  // namespace

TEST_CASE("rref on small matrices") {
  Field F3 = Field::make(3, 1);
  auto id = rref_full(Matrix::identity(F3, 3));
  CHECK(id.rank == 3);
  CHECK(id.kernel_basis.empty());

  Field F2 = Field::make(2, 1);
  Matrix A(F2, 2, 2);
  A.set(0, 0, F2.one());
  A.set(0, 1, F2.one());
  A.set(1, 0, F2.one());
  A.set(1, 1, F2.one());
  auto res = rref_full(A);
  CHECK(res.rank == 1);
  REQUIRE(res.kernel_basis.size() == 1);
  CHECK(res.kernel_basis[0] == Vec{F2.one(), F2.one()});
}

TEST_CASE("rank via transpose on seeded random matrices") {
  Field F5 = Field::make(5, 1);
  std::mt19937_64 rng(0);
  Matrix A = random_matrix(F5, 6, 4, rng);
  CHECK(rank_of(A) == rank_of(A.transpose()));
}

TEST_CASE("rref is idempotent and kernels verify") {
  for (const Field& F : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2)}) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 100; ++t) {
      Matrix A = random_matrix(F, 1 + static_cast<int>(rng() % 6),
                               1 + static_cast<int>(rng() % 6), rng);
      auto res = rref_full(A);
      auto res2 = rref_full(res.rref);
      CHECK(res2.rref == res.rref);
      CHECK(res.rank + static_cast<int>(res.kernel_basis.size()) == A.cols());
      for (const auto& v : res.kernel_basis)
        CHECK(vec_is_zero(F, A.mul_vec(v)));
    }
  }
}

TEST_CASE("rank(A) = rank(A^T) on 500 seeded matrices") {
  Field F = Field::make(3, 1);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 500; ++t) {
    Matrix A = random_matrix(F, 1 + static_cast<int>(rng() % 7),
                             1 + static_cast<int>(rng() % 7), rng);
    CHECK(rank_of(A) == rank_of(A.transpose()));
  }
}

TEST_CASE("solve") {
  Field F3 = Field::make(3, 1);
  Matrix I = Matrix::identity(F3, 3);
  Vec b = {F3.from_int(2), F3.from_int(0), F3.from_int(1)};
  auto x = solve(I, b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  Matrix Z(F3, 2, 2);
  CHECK_FALSE(solve(Z, Vec{F3.one(), F3.zero()}).has_value());

  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    Matrix A = random_matrix(F3, 4, 5, rng);
    Vec x0 = vec_zero(F3, 5);
    for (auto& e : x0) e = F3.element(rng() % 3);
    Vec rhs = A.mul_vec(x0);
    auto sol = solve(A, rhs);
    REQUIRE(sol.has_value());
    CHECK(vec_is_zero(F3, vec_sub(F3, A.mul_vec(*sol), rhs)));
  }
}

TEST_CASE("product across fields is rejected") {
  Matrix A(Field::make(2, 1), 2, 2), B(Field::make(3, 1), 2, 2);
  CHECK_THROWS_AS(A.mul(B), FieldMismatch);
}

TEST_CASE("semilinear kernel basics") {
  Field F2 = Field::make(2, 1);
  Matrix Z(F2, 3, 3);
  CHECK(semilinear_kernel(Z, 1).size() == 3);

  // over GF(p) with k = 1 the Frobenius is trivial, so an invertible matrix
  // has zero semilinear kernel
  Field F5 = Field::make(5, 1);
  Matrix M(F5, 2, 2);
  M.set(0, 0, F5.from_int(2));
  M.set(0, 1, F5.from_int(1));
  M.set(1, 1, F5.from_int(3));
  CHECK(semilinear_kernel(M, 1).empty());

  CHECK_THROWS_AS(semilinear_kernel(Matrix(F2, 2, 3), 1), NonSquare);
}

TEST_CASE("semilinear kernel of diag(1,0) over GF(4)") {
  Field F4 = Field::make(2, 2);
  Matrix A(F4, 2, 2);
  A.set(0, 0, F4.one());
  auto basis = semilinear_kernel(A, 1);

  // oracle: direct enumeration of all 16 vectors
  std::vector<Vec> expected;
  RowSpan span(F4, 2);
  for (uint64_t i = 0; i < 4; ++i)
    for (uint64_t j = 0; j < 4; ++j) {
      Vec v = {F4.element(i), F4.element(j)};
      Vec tw = {F4.frobenius(v[0]), F4.frobenius(v[1])};
      if (vec_is_zero(F4, A.mul_vec(tw)) && span.add(v)) expected.push_back(v);
    }
  REQUIRE(expected.size() == 1);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == Vec{F4.zero(), F4.one()});
}

TEST_CASE("RowSpan membership and coordinates") {
  Field F = Field::make(3, 1);
  RowSpan span(F, 3);
  CHECK(span.add({F.from_int(1), F.from_int(2), F.from_int(0)}));
  CHECK(span.add({F.from_int(0), F.from_int(1), F.from_int(1)}));
  CHECK_FALSE(span.add({F.from_int(1), F.from_int(0), F.from_int(1)}));  // dependent
  CHECK(span.dim() == 2);
  Vec target = {F.from_int(2), F.from_int(2), F.from_int(1)};
  auto coords = span.coordinates(target);
  REQUIRE(coords.has_value());
  Vec rebuilt = vec_zero(F, 3);
  for (size_t i = 0; i < coords->size(); ++i)
    rebuilt = vec_add(F, rebuilt, vec_scale(F, (*coords)[i], span.basis()[i]));
  CHECK(rebuilt == target);
  CHECK_FALSE(span.coordinates({F.zero(), F.zero(), F.one()}).has_value());
}
