#ifndef LIEPCD_REP_HPP
#define LIEPCD_REP_HPP

#include <memory>

#include "liepcd/liep.hpp"

namespace liepcd {

/// A finite-dimensional L-module given by action matrices for the basis,
/// with the commutator convention rho([x,y]) = rho(x)rho(y) - rho(y)rho(x).
/// restricted_flag records whether rho(e_i^{[p]}) = rho(e_i)^p holds.
class RestrictedModule {
 public:
  static RestrictedModule make(const LiePAlgebra& L, std::vector<Matrix> rho,
                               bool require_restricted);

  const LiePAlgebra& algebra() const { return *L_; }
  int dim() const { return dim_m_; }
  bool restricted() const { return restricted_; }
  const Matrix& rho_basis(int i) const { return rho_[static_cast<size_t>(i)]; }

  /// Linear extension of the action to an arbitrary element.
  Matrix rho(const Vec& x) const;

 private:
  std::shared_ptr<const LiePAlgebra> L_;
  int dim_m_ = 0;
  std::vector<Matrix> rho_;
  bool restricted_ = false;
};

RestrictedModule trivial_module(const LiePAlgebra& L);
RestrictedModule adjoint_module(const LiePAlgebra& L);
RestrictedModule dual_module(const RestrictedModule& M);

}  // namespace liepcd

#endif
