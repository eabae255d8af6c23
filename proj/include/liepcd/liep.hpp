#ifndef LIEPCD_LIEP_HPP
#define LIEPCD_LIEP_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liepcd/linalg.hpp"

namespace liepcd {

struct AxiomReport {
  bool antisym_ok = true;
  bool jacobi_ok = true;
  bool ad_compat_ok = true;
  bool semilinear_ok = true;
  bool jacobson_ok = true;
  // (axiom name, witness basis indices)
  std::vector<std::pair<std::string, std::vector<int>>> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Sparse bracket data: [e_i, e_j] for i < j, missing pairs are zero.
using BracketMap = std::map<std::pair<int, int>, Vec>;

/// A finite-dimensional Lie p-algebra given by structure constants and the
/// p-map on a basis.  Validated eagerly: construction rejects any axiom
/// violation, so downstream code may assume a legal p-algebra.
class LiePAlgebra {
 public:
  static LiePAlgebra make(const Field& F, int dim,
                          std::vector<std::string> basis_names,
                          const BracketMap& brackets,
                          std::vector<Vec> pmap_basis,
                          std::string name = "");

  /// Shape-checks only; the caller runs verify_axioms itself.
  static LiePAlgebra make_unvalidated(const Field& F, int dim,
                                      std::vector<std::string> basis_names,
                                      const BracketMap& brackets,
                                      std::vector<Vec> pmap_basis,
                                      std::string name = "");

  const Field& field() const { return F_; }
  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const Vec& bracket_basis(int i, int j) const;  // [e_i, e_j], any i, j
  const Vec& pmap_basis(int i) const { return pmap_[static_cast<size_t>(i)]; }
  const Matrix& ad_basis(int i) const { return ad_[static_cast<size_t>(i)]; }
  /// The sparse i<j bracket table (serialization form).
  BracketMap sparse_brackets() const;

  bool is_abelian() const;
  /// Columns e_i^{[p]}: matrix of the p-semilinear p-map in the basis.
  Matrix pmap_matrix() const;

  /// Tables embedded into an extension of the base field; axioms carry over.
  LiePAlgebra base_change(const Field& E) const;

 private:
  Field F_;
  int dim_ = 0;
  std::string name_;
  std::vector<std::string> names_;
  std::vector<std::vector<Vec>> c_;  // dense antisymmetrized [e_i, e_j]
  std::vector<Vec> pmap_;
  std::vector<Matrix> ad_;

  static LiePAlgebra assemble_(const Field& F, int dim,
                               std::vector<std::string> names,
                               const BracketMap& brackets,
                               std::vector<Vec> pmap, std::string name);
};

AxiomReport verify_axioms(const LiePAlgebra& L);

Vec bracket(const LiePAlgebra& L, const Vec& x, const Vec& y);
Matrix adjoint_matrix(const LiePAlgebra& L, const Vec& x);

/// x^{[p]} by one-summand-at-a-time Jacobson expansion over the basis.
Vec p_power(const LiePAlgebra& L, const Vec& x);
Vec p_power_iter(const LiePAlgebra& L, Vec x, int n);

/// s_i(x,y): i * s_i is the t^{i-1} coefficient of (ad(tx+y))^{p-1}(x),
/// extracted by evaluation at the prime subfield points and interpolation.
Vec jacobson_s(const LiePAlgebra& L, int i, const Vec& x, const Vec& y);
std::vector<Vec> jacobson_s_all(const LiePAlgebra& L, const Vec& x, const Vec& y);

/// Reduced basis of the subalgebra generated by gens, closed under the
/// bracket (and the p-map when with_pmap).
std::vector<Vec> subalgebra_closure(const LiePAlgebra& L,
                                    const std::vector<Vec>& gens,
                                    bool with_pmap);

LiePAlgebra direct_sum(const LiePAlgebra& A, const LiePAlgebra& B);

/// The minimal relation x^{[p]^m} = sum_{i<m} mu_i x^{[p]^i} as the monic
/// p-polynomial f(t) = t^{p^m} - sum mu_i t^{p^i}; f applied to x gives 0.
Poly minimal_p_polynomial(const LiePAlgebra& L, const Vec& x);

/// Evaluate a p-polynomial (nonzero coefficients only at t^{p^i}) on x.
Vec apply_p_polynomial(const LiePAlgebra& L, const Poly& f, const Vec& x);

/// Presents the span of `basis` (must be bracket- and p-closed) as a
/// standalone p-algebra in the given basis.
LiePAlgebra subalgebra_as_algebra(const LiePAlgebra& L,
                                  const std::vector<Vec>& basis,
                                  const std::string& name = "subalgebra");

}  // namespace liepcd

#endif
