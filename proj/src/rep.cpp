#include "liepcd/rep.hpp"

#include <memory>

namespace liepcd {

RestrictedModule RestrictedModule::make(const LiePAlgebra& L,
                                        std::vector<Matrix> rho,
                                        bool require_restricted) {
  const Field& F = L.field();
  if (static_cast<int>(rho.size()) != L.dim())
    throw MalformedInput("need one action matrix per basis element");
  int m = rho.empty() ? 0 : rho[0].rows();
  for (const auto& r : rho) {
    if (r.field() != F) throw FieldMismatch("action matrices over the wrong field");
    if (r.rows() != m || r.cols() != m)
      throw MalformedInput("action matrices must be square of equal size");
  }
  for (int i = 0; i < L.dim(); ++i)
    for (int j = i + 1; j < L.dim(); ++j) {
      Matrix lhs(F, m, m);
      const Vec& cij = L.bracket_basis(i, j);
      for (int k = 0; k < L.dim(); ++k)
        if (!F.is_zero(cij[static_cast<size_t>(k)]))
          lhs = lhs.add(rho[static_cast<size_t>(k)].scale(cij[static_cast<size_t>(k)]));
      Matrix rhs = rho[static_cast<size_t>(i)].mul(rho[static_cast<size_t>(j)])
                       .sub(rho[static_cast<size_t>(j)].mul(rho[static_cast<size_t>(i)]));
      if (!(lhs == rhs))
        throw ModuleAxiomViolation("bracket compatibility fails at basis pair (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")");
    }
  bool restricted = true;
  int witness = -1;
  for (int i = 0; i < L.dim(); ++i) {
    Matrix lhs(F, m, m);
    const Vec& pi = L.pmap_basis(i);
    for (int k = 0; k < L.dim(); ++k)
      if (!F.is_zero(pi[static_cast<size_t>(k)]))
        lhs = lhs.add(rho[static_cast<size_t>(k)].scale(pi[static_cast<size_t>(k)]));
    if (!(lhs == rho[static_cast<size_t>(i)].pow(static_cast<int>(F.p())))) {
      restricted = false;
      witness = i;
      break;
    }
  }
  if (require_restricted && !restricted)
    throw ModuleAxiomViolation("p-compatibility fails at basis element " +
                               std::to_string(witness));
  RestrictedModule M;
  M.L_ = std::make_shared<LiePAlgebra>(L);
  M.dim_m_ = m;
  M.rho_ = std::move(rho);
  M.restricted_ = restricted;
  return M;
}

Matrix RestrictedModule::rho(const Vec& x) const {
  const Field& F = L_->field();
  Matrix out(F, dim_m_, dim_m_);
  for (int i = 0; i < L_->dim(); ++i)
    if (!F.is_zero(x[static_cast<size_t>(i)]))
      out = out.add(rho_[static_cast<size_t>(i)].scale(x[static_cast<size_t>(i)]));
  return out;
}

RestrictedModule trivial_module(const LiePAlgebra& L) {
  std::vector<Matrix> rho(static_cast<size_t>(L.dim()), Matrix(L.field(), 1, 1));
  return RestrictedModule::make(L, std::move(rho), false);
}

RestrictedModule adjoint_module(const LiePAlgebra& L) {
  std::vector<Matrix> rho;
  rho.reserve(static_cast<size_t>(L.dim()));
  for (int i = 0; i < L.dim(); ++i) rho.push_back(L.ad_basis(i));
  return RestrictedModule::make(L, std::move(rho), false);
}

RestrictedModule dual_module(const RestrictedModule& M) {
  std::vector<Matrix> rho;
  const Field& F = M.algebra().field();
  for (int i = 0; i < M.algebra().dim(); ++i)
    rho.push_back(M.rho_basis(i).transpose().scale(F.neg(F.one())));
  return RestrictedModule::make(M.algebra(), std::move(rho), false);
}

}  // namespace liepcd
