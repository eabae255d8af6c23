#ifndef LIEPCD_UENV_HPP
#define LIEPCD_UENV_HPP

#include <memory>

#include "liepcd/rep.hpp"

namespace liepcd {

using SparseVec = std::vector<std::pair<int, Fel>>;  // sorted by index

/// Finite-dimensional associative algebra with a full multiplication table:
/// u(L) on its PBW basis, or K[x]/(f) on powers of x.
class AssocAlgebra {
 public:
  /// Restricted enveloping algebra on the ordered monomial basis
  /// e_1^{a_1}...e_d^{a_d}, 0 <= a_i < p; products by straightening.
  static AssocAlgebra uenv(const LiePAlgebra& L, uint64_t dim_guard = 512,
                           uint64_t assoc_seed = 0);
  static AssocAlgebra poly_quotient(const Field& F, const Poly& f);

  const Field& field() const { return F_; }
  int dim() const { return dim_; }
  int unit_index() const { return unit_; }
  bool has_augmentation() const { return !augmentation_.empty(); }
  /// epsilon as a coefficient functional (1 on the unit monomial for u(L)).
  const Vec& augmentation() const { return augmentation_; }
  const std::string& basis_label(int i) const { return labels_[static_cast<size_t>(i)]; }
  /// For u(L): the exponent tuple of basis monomial i.
  const std::vector<int>& exponents(int i) const { return exps_[static_cast<size_t>(i)]; }

  const SparseVec& product(int a, int b) const {
    return table_[static_cast<size_t>(a)][static_cast<size_t>(b)];
  }
  Vec multiply(const Vec& a, const Vec& b) const;
  Matrix left_mult_matrix(const Vec& a) const;   // x -> a*x
  Matrix right_mult_matrix(const Vec& a) const;  // x -> x*a
  Vec element_pow(const Vec& a, uint64_t e) const;

  bool is_commutative() const;

 private:
  Field F_;
  int dim_ = 0;
  int unit_ = 0;
  std::vector<std::vector<SparseVec>> table_;
  Vec augmentation_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> exps_;

  void verify_associativity_(uint64_t seed) const;
};

/// Free resolution ... -> u^{n_2} -> u^{n_1} -> u -> K of the trivial module
/// by plain covers: stage kernels generated greedily from RREF pivot lifts,
/// closed under left multiplication by the algebra generators.
struct FreeResolution {
  std::shared_ptr<const AssocAlgebra> A;
  std::vector<int> ranks;  // n_0 = 1, n_1, ..., n_stages
  /// generators[i][r]: the image in u^{n_i} of the r-th basis vector of
  /// u^{n_{i+1}}, flattened as n_i * dim coordinates.
  std::vector<std::vector<Vec>> generators;
  /// ranks of the K-linear boundary maps, boundary_rank[0] = rank eps = 1.
  std::vector<int> boundary_rank;
  std::vector<int> kernel_dim;  // nullity of each boundary

  bool exact() const;  // rank(d_{i+1}) == nullity(d_i) at every built stage
};

FreeResolution build_free_resolution(const AssocAlgebra& A, int stages);

/// dim Ext^n_{u(L)}(K, M) for n = 0..max_degree via Hom(F_., M).
std::vector<int> ext_dims(const FreeResolution& R, const RestrictedModule& M,
                          int max_degree);
int ext_dim(const LiePAlgebra& L, const RestrictedModule& M, int n,
            uint64_t dim_guard = 512);
std::vector<int> ext_dims(const LiePAlgebra& L, const RestrictedModule& M,
                          int max_degree, uint64_t dim_guard = 512);

/// dim HH^n(A, A) from the full bar cochain complex.
int hochschild_dim(const AssocAlgebra& A, int n);

/// dim HH^n(K[x]/(f), K[x]/(f)) from the 2-periodic complex
/// A -0-> A -f'-> A -0-> A -f'-> ... (degree 0 leftmost).
int holm_periodic_hochschild(const Field& F, const Poly& f, int n);

/// The ideal of nilpotents of a commutative algebra: kernel of a |-> a^{p^m}
/// with p^m >= dim, via the semilinear kernel of the iterated Frobenius.
std::vector<Vec> nilradical(const AssocAlgebra& A);

struct IsomCheck {
  int lhs_dim = 0;  // dim HH^n(u(L), u(L))
  int rhs_dim = 0;  // dim u(L) * dim H^n_*(L, K)
  bool equal = false;
};

/// Numerical check of H^n_*(L, u(L)^ad) = HH^n(u(L), u(L)) for abelian L,
/// where u(L)^ad splits into dim u(L) trivial modules.
IsomCheck verify_isom_eq6(const LiePAlgebra& L, int n, uint64_t dim_guard = 512);

}  // namespace liepcd

#endif
