#include "liepcd/liep.hpp"

#include <algorithm>
#include <sstream>

namespace liepcd {

std::string AxiomReport::summary() const {
  if (ok()) return "all axioms hold";
  std::ostringstream os;
  for (const auto& [axiom, witness] : violations) {
    os << axiom << " fails at (";
    for (size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
    os << ") ";
  }
  return os.str();
}

const Vec& LiePAlgebra::bracket_basis(int i, int j) const {
  return c_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

BracketMap LiePAlgebra::sparse_brackets() const {
  BracketMap m;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (!vec_is_zero(F_, bracket_basis(i, j))) m[{i, j}] = bracket_basis(i, j);
  return m;
}

bool LiePAlgebra::is_abelian() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (!vec_is_zero(F_, bracket_basis(i, j))) return false;
  return true;
}

Matrix LiePAlgebra::pmap_matrix() const {
  Matrix S(F_, dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int i = 0; i < dim_; ++i) S.set(i, j, pmap_[static_cast<size_t>(j)][static_cast<size_t>(i)]);
  return S;
}

LiePAlgebra LiePAlgebra::assemble_(const Field& F, int dim,
                                   std::vector<std::string> names,
                                   const BracketMap& brackets,
                                   std::vector<Vec> pmap, std::string name) {
  LiePAlgebra L;
  L.F_ = F;
  L.dim_ = dim;
  L.name_ = std::move(name);
  if (names.empty())
    for (int i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  if (static_cast<int>(names.size()) != dim)
    throw MalformedInput("basis name count does not match dimension");
  L.names_ = std::move(names);
  L.c_.assign(static_cast<size_t>(dim),
              std::vector<Vec>(static_cast<size_t>(dim), vec_zero(F, dim)));
  for (const auto& [ij, v] : brackets) {
    auto [i, j] = ij;
    if (i < 0 || j < 0 || i >= dim || j >= dim || i >= j)
      throw MalformedInput("bracket table must list pairs with i < j");
    if (static_cast<int>(v.size()) != dim)
      throw MalformedInput("bracket coefficient vector has wrong length");
    L.c_[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
    Vec neg(v.size());
    for (size_t t = 0; t < v.size(); ++t) neg[t] = F.neg(v[t]);
    L.c_[static_cast<size_t>(j)][static_cast<size_t>(i)] = std::move(neg);
  }
  if (static_cast<int>(pmap.size()) != dim)
    throw MalformedInput("p-map must give one vector per basis element");
  for (const auto& v : pmap)
    if (static_cast<int>(v.size()) != dim)
      throw MalformedInput("p-map coefficient vector has wrong length");
  L.pmap_ = std::move(pmap);
  L.ad_.reserve(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    Matrix ad(F, dim, dim);
    for (int j = 0; j < dim; ++j)
      for (int r = 0; r < dim; ++r)
        ad.set(r, j, L.c_[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(r)]);
    L.ad_.push_back(std::move(ad));
  }
  return L;
}

LiePAlgebra LiePAlgebra::make(const Field& F, int dim,
                              std::vector<std::string> basis_names,
                              const BracketMap& brackets,
                              std::vector<Vec> pmap_basis, std::string name) {
  LiePAlgebra L = assemble_(F, dim, std::move(basis_names), brackets,
                            std::move(pmap_basis), std::move(name));
  AxiomReport report = verify_axioms(L);
  if (!report.ok())
    throw AxiomViolation("not a Lie p-algebra: " + report.summary());
  return L;
}

LiePAlgebra LiePAlgebra::make_unvalidated(const Field& F, int dim,
                                          std::vector<std::string> basis_names,
                                          const BracketMap& brackets,
                                          std::vector<Vec> pmap_basis,
                                          std::string name) {
  return assemble_(F, dim, std::move(basis_names), brackets, std::move(pmap_basis),
                   std::move(name));
}

LiePAlgebra LiePAlgebra::base_change(const Field& E) const {
  if (E == F_) return *this;
  Embedding emb(F_, E);
  auto map_vec = [&](const Vec& v) {
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = emb.map(v[i]);
    return out;
  };
  BracketMap bm;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (!vec_is_zero(F_, bracket_basis(i, j))) bm[{i, j}] = map_vec(bracket_basis(i, j));
  std::vector<Vec> pm;
  pm.reserve(pmap_.size());
  for (const auto& v : pmap_) pm.push_back(map_vec(v));
  return assemble_(E, dim_, names_, bm, std::move(pm), name_);
}

Vec bracket(const LiePAlgebra& L, const Vec& x, const Vec& y) {
  const Field& F = L.field();
  if (static_cast<int>(x.size()) != L.dim() || static_cast<int>(y.size()) != L.dim())
    throw MalformedInput("coordinate vector length mismatch");
  Vec out = vec_zero(F, L.dim());
  for (int i = 0; i < L.dim(); ++i) {
    if (F.is_zero(x[static_cast<size_t>(i)])) continue;
    for (int j = 0; j < L.dim(); ++j) {
      if (F.is_zero(y[static_cast<size_t>(j)])) continue;
      Fel coeff = F.mul(x[static_cast<size_t>(i)], y[static_cast<size_t>(j)]);
      const Vec& cij = L.bracket_basis(i, j);
      for (int r = 0; r < L.dim(); ++r)
        out[static_cast<size_t>(r)] =
            F.add(out[static_cast<size_t>(r)], F.mul(coeff, cij[static_cast<size_t>(r)]));
    }
  }
  return out;
}

Matrix adjoint_matrix(const LiePAlgebra& L, const Vec& x) {
  const Field& F = L.field();
  Matrix M(F, L.dim(), L.dim());
  for (int i = 0; i < L.dim(); ++i) {
    if (F.is_zero(x[static_cast<size_t>(i)])) continue;
    for (int r = 0; r < L.dim(); ++r)
      for (int j = 0; j < L.dim(); ++j)
        M.set(r, j,
              F.add(M.get(r, j), F.mul(x[static_cast<size_t>(i)],
                                       L.ad_basis(i).get(r, j))));
  }
  return M;
}

std::vector<Vec> jacobson_s_all(const LiePAlgebra& L, const Vec& x, const Vec& y) {
  const Field& F = L.field();
  const int p = static_cast<int>(F.p());
  const int d = L.dim();
  // g(t) = (ad(tx+y))^{p-1}(x) has degree <= p-1; the prime subfield
  // supplies p distinct evaluation points in any characteristic.
  std::vector<Fel> ts;
  std::vector<Vec> values;
  Matrix adx = adjoint_matrix(L, x), ady = adjoint_matrix(L, y);
  for (int j = 0; j < p; ++j) {
    Fel t = F.from_int(j);
    Matrix ad = adx.scale(t).add(ady);
    Vec g = x;
    for (int q = 0; q < p - 1; ++q) g = ad.mul_vec(g);
    ts.push_back(t);
    values.push_back(std::move(g));
  }
  std::vector<Vec> s(static_cast<size_t>(p - 1), vec_zero(F, d));
  for (int c = 0; c < d; ++c) {
    std::vector<std::pair<Fel, Fel>> pts;
    for (int j = 0; j < p; ++j)
      pts.push_back({ts[static_cast<size_t>(j)], values[static_cast<size_t>(j)][static_cast<size_t>(c)]});
    Poly P = interpolate(F, pts);
    for (int i = 1; i <= p - 1; ++i) {
      if (P.deg() < i - 1) continue;
      s[static_cast<size_t>(i - 1)][static_cast<size_t>(c)] =
          F.div(P.c[static_cast<size_t>(i - 1)], F.from_int(i));
    }
  }
  return s;
}

Vec jacobson_s(const LiePAlgebra& L, int i, const Vec& x, const Vec& y) {
  const int p = static_cast<int>(L.field().p());
  if (i < 1 || i > p - 1) throw InvalidParams("jacobson_s index out of range");
  return jacobson_s_all(L, x, y)[static_cast<size_t>(i - 1)];
}

Vec p_power(const LiePAlgebra& L, const Vec& x) {
  const Field& F = L.field();
  const int d = L.dim();
  Vec partial, acc;
  bool started = false;
  for (int i = 0; i < d; ++i) {
    if (F.is_zero(x[static_cast<size_t>(i)])) continue;
    Vec v = vec_zero(F, d);
    v[static_cast<size_t>(i)] = x[static_cast<size_t>(i)];
    Vec v_pp = vec_scale(F, F.pow(x[static_cast<size_t>(i)], static_cast<uint64_t>(F.p())),
                         L.pmap_basis(i));
    if (!started) {
      partial = std::move(v);
      acc = std::move(v_pp);
      started = true;
      continue;
    }
    Vec next = vec_add(F, acc, v_pp);
    for (const Vec& si : jacobson_s_all(L, partial, v)) next = vec_add(F, next, si);
    acc = std::move(next);
    partial = vec_add(F, partial, v);
  }
  if (!started) return vec_zero(F, d);
  return acc;
}

Vec p_power_iter(const LiePAlgebra& L, Vec x, int n) {
  for (int i = 0; i < n; ++i) x = p_power(L, x);
  return x;
}

AxiomReport verify_axioms(const LiePAlgebra& L) {
  AxiomReport rep;
  const Field& F = L.field();
  const int d = L.dim();
  const int p = static_cast<int>(F.p());
  for (int i = 0; i < d && rep.jacobi_ok; ++i)
    for (int j = i + 1; j < d && rep.jacobi_ok; ++j)
      for (int k = j + 1; k < d; ++k) {
        Vec J = bracket(L, L.bracket_basis(i, j), basis_vec(F, d, k));
        J = vec_add(F, J, bracket(L, L.bracket_basis(j, k), basis_vec(F, d, i)));
        J = vec_add(F, J, bracket(L, L.bracket_basis(k, i), basis_vec(F, d, j)));
        if (!vec_is_zero(F, J)) {
          rep.jacobi_ok = false;
          rep.violations.push_back({"jacobi", {i, j, k}});
          break;
        }
      }
  for (int i = 0; i < d; ++i) {
    Matrix lhs = adjoint_matrix(L, L.pmap_basis(i));
    Matrix rhs = L.ad_basis(i).pow(p);
    if (!(lhs == rhs)) {
      rep.ad_compat_ok = false;
      rep.violations.push_back({"ad_compatibility", {i}});
    }
  }
  if (rep.jacobi_ok && rep.ad_compat_ok) {
    // semilinearity and the Jacobson sum rule on basis data
    const uint64_t nscal = std::min<uint64_t>(F.size(), 9);
    for (int i = 0; i < d; ++i) {
      for (uint64_t s = 0; s < nscal; ++s) {
        Fel lam = F.element(s);
        Vec lhs = p_power(L, vec_scale(F, lam, basis_vec(F, d, i)));
        Vec rhs = vec_scale(F, F.pow(lam, static_cast<uint64_t>(p)), L.pmap_basis(i));
        if (lhs != rhs) {
          rep.semilinear_ok = false;
          rep.violations.push_back({"semilinearity", {i, static_cast<int>(s)}});
          break;
        }
      }
    }
    for (int i = 0; i < d && rep.jacobson_ok; ++i)
      for (int j = i + 1; j < d; ++j) {
        Vec sum = vec_add(F, basis_vec(F, d, i), basis_vec(F, d, j));
        Vec lhs = p_power(L, sum);
        Vec rhs = vec_add(F, L.pmap_basis(i), L.pmap_basis(j));
        for (const Vec& si :
             jacobson_s_all(L, basis_vec(F, d, i), basis_vec(F, d, j)))
          rhs = vec_add(F, rhs, si);
        if (lhs != rhs) {
          rep.jacobson_ok = false;
          rep.violations.push_back({"jacobson_sum", {i, j}});
          break;
        }
      }
  }
  return rep;
}

std::vector<Vec> subalgebra_closure(const LiePAlgebra& L,
                                    const std::vector<Vec>& gens,
                                    bool with_pmap) {
  if (gens.empty()) throw InvalidParams("closure of an empty generating set");
  const Field& F = L.field();
  RowSpan span(F, L.dim());
  std::vector<Vec> reps;
  auto push = [&](const Vec& v) {
    if (span.add(v)) {
      reps.push_back(v);
      return true;
    }
    return false;
  };
  for (const auto& g : gens) push(g);
  for (size_t head = 0; head < reps.size(); ++head) {
    Vec a = reps[head];  // reps grows while iterating
    for (size_t other = 0; other <= head; ++other) push(bracket(L, a, reps[other]));
    if (with_pmap) push(p_power(L, a));
  }
  return span.basis();
}

LiePAlgebra direct_sum(const LiePAlgebra& A, const LiePAlgebra& B) {
  const Field& F = A.field();
  if (F != B.field()) throw FieldMismatch("direct sum across different fields");
  int d = A.dim() + B.dim();
  auto lift_a = [&](const Vec& v) {
    Vec out = vec_zero(F, d);
    for (int i = 0; i < A.dim(); ++i) out[static_cast<size_t>(i)] = v[static_cast<size_t>(i)];
    return out;
  };
  auto lift_b = [&](const Vec& v) {
    Vec out = vec_zero(F, d);
    for (int i = 0; i < B.dim(); ++i) out[static_cast<size_t>(A.dim() + i)] = v[static_cast<size_t>(i)];
    return out;
  };
  BracketMap bm;
  for (int i = 0; i < A.dim(); ++i)
    for (int j = i + 1; j < A.dim(); ++j)
      if (!vec_is_zero(F, A.bracket_basis(i, j))) bm[{i, j}] = lift_a(A.bracket_basis(i, j));
  for (int i = 0; i < B.dim(); ++i)
    for (int j = i + 1; j < B.dim(); ++j)
      if (!vec_is_zero(F, B.bracket_basis(i, j)))
        bm[{A.dim() + i, A.dim() + j}] = lift_b(B.bracket_basis(i, j));
  std::vector<Vec> pm;
  for (int i = 0; i < A.dim(); ++i) pm.push_back(lift_a(A.pmap_basis(i)));
  for (int i = 0; i < B.dim(); ++i) pm.push_back(lift_b(B.pmap_basis(i)));
  std::vector<std::string> names = A.basis_names();
  for (const auto& n : B.basis_names()) {
    std::string cand = n;
    while (std::find(names.begin(), names.end(), cand) != names.end()) cand += "'";
    names.push_back(cand);
  }
  return LiePAlgebra::make(F, d, std::move(names), bm, std::move(pm),
                           A.name() + "+" + B.name());
}

Poly minimal_p_polynomial(const LiePAlgebra& L, const Vec& x) {
  const Field& F = L.field();
  if (vec_is_zero(F, x)) throw ZeroElement("minimal p-polynomial of 0");
  std::vector<Vec> powers = {x};
  for (int m = 1;; ++m) {
    powers.push_back(p_power(L, powers.back()));
    Matrix cols(F, L.dim(), m);
    for (int i = 0; i < m; ++i)
      for (int r = 0; r < L.dim(); ++r)
        cols.set(r, i, powers[static_cast<size_t>(i)][static_cast<size_t>(r)]);
    auto mu = solve(cols, powers[static_cast<size_t>(m)]);
    if (!mu.has_value()) continue;
    // f(t) = t^{p^m} - sum mu_i t^{p^i}
    uint64_t top = 1;
    for (int i = 0; i < m; ++i) top *= static_cast<uint64_t>(F.p());
    std::vector<Fel> coeffs(top + 1, F.zero());
    coeffs[top] = F.one();
    uint64_t pi = 1;
    for (int i = 0; i < m; ++i) {
      coeffs[pi] = F.neg((*mu)[static_cast<size_t>(i)]);
      pi *= static_cast<uint64_t>(F.p());
    }
    return poly_make(F, std::move(coeffs));
  }
}

Vec apply_p_polynomial(const LiePAlgebra& L, const Poly& f, const Vec& x) {
  const Field& F = L.field();
  Vec out = vec_zero(F, L.dim());
  Vec power = x;  // x^{[p]^i}
  uint64_t pi = 1;
  for (int i = 0;; ++i) {
    if (static_cast<int>(pi) > f.deg()) break;
    const Fel& c = f.c[pi];
    if (!F.is_zero(c)) out = vec_add(F, out, vec_scale(F, c, power));
    pi *= static_cast<uint64_t>(F.p());
    if (static_cast<int>(pi) <= f.deg()) power = p_power(L, power);
  }
  return out;
}

LiePAlgebra subalgebra_as_algebra(const LiePAlgebra& L,
                                  const std::vector<Vec>& basis,
                                  const std::string& name) {
  const Field& F = L.field();
  int d = static_cast<int>(basis.size());
  RowSpan span(F, L.dim());
  for (const auto& b : basis)
    if (!span.add(b)) throw InvalidParams("subalgebra basis is dependent");
  // span coordinates are w.r.t. the reduced basis; convert to the given one
  Matrix cols(F, L.dim(), d);
  for (int j = 0; j < d; ++j)
    for (int r = 0; r < L.dim(); ++r)
      cols.set(r, j, basis[static_cast<size_t>(j)][static_cast<size_t>(r)]);
  auto coords = [&](const Vec& v) {
    auto sol = solve(cols, v);
    if (!sol.has_value())
      throw InvalidParams("basis does not span a closed subalgebra");
    return *sol;
  };
  BracketMap bm;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Vec br = coords(bracket(L, basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)]));
      if (!vec_is_zero(F, br)) bm[{i, j}] = br;
    }
  std::vector<Vec> pm;
  for (int i = 0; i < d; ++i) pm.push_back(coords(p_power(L, basis[static_cast<size_t>(i)])));
  return LiePAlgebra::make(F, d, {}, bm, std::move(pm), name);
}

}  // namespace liepcd
