#ifndef LIEPCD_COHOMOLOGY_HPP
#define LIEPCD_COHOMOLOGY_HPP

#include "liepcd/rep.hpp"

namespace liepcd {

/// Chevalley-Eilenberg cochain complex of (L, M).  Cochain basis: lex-ordered
/// index subsets tensored with the module basis.  Sign convention:
///   (df)(x_0..x_n) = sum_i (-1)^i x_i.f(..x^_i..)
///                  + sum_{i<j} (-1)^{i+j} f([x_i,x_j], ..x^_i..x^_j..).
class CEComplex {
 public:
  CEComplex(const LiePAlgebra& L, const RestrictedModule& M);

  int cochain_dim(int n) const;           // binom(d, n) * dim M
  const Matrix& differential(int n) const;  // d_n : C^n -> C^{n+1}
  int cohomology_dim(int n) const;
  std::vector<int> cohomology_dims(int max_degree) const;

  /// sum (-1)^n dim C^n == sum (-1)^n dim H^n.
  bool euler_check() const;

  /// d_{n+1} o d_n = 0 in every computed degree.
  bool composite_is_zero() const;

 private:
  LiePAlgebra L_;
  RestrictedModule M_;
  std::vector<std::vector<std::vector<int>>> subsets_;  // per degree, lex order
  std::vector<Matrix> d_;                               // d_0 .. d_dim
};

int ce_cohomology_dim(const LiePAlgebra& L, const RestrictedModule& M, int n);
bool ce_euler_check(const LiePAlgebra& L, const RestrictedModule& M);

int binomial(int n, int k);

}  // namespace liepcd

#endif
