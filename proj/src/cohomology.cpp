#include "liepcd/cohomology.hpp"

#include <algorithm>

namespace liepcd {

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return static_cast<int>(r);
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int d, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // lexicographic enumeration
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < d; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

int subset_index(const std::vector<std::vector<int>>& list, const std::vector<int>& s) {
  auto it = std::lower_bound(list.begin(), list.end(), s);
  return static_cast<int>(it - list.begin());
}

}  // namespace

CEComplex::CEComplex(const LiePAlgebra& L, const RestrictedModule& M)
    : L_(L), M_(M) {
  if (!(M.algebra().field() == L.field()) || M.algebra().dim() != L.dim())
    throw FieldMismatch("module does not live over this algebra");
  const Field& F = L.field();
  const int d = L.dim();
  const int dm = M.dim();
  subsets_.resize(static_cast<size_t>(d) + 2);
  for (int n = 0; n <= d + 1; ++n) subsets_[static_cast<size_t>(n)] = subsets_of_size(d, n);
  d_.reserve(static_cast<size_t>(d) + 1);
  for (int n = 0; n <= d; ++n) {
    const auto& dom = subsets_[static_cast<size_t>(n)];
    const auto& cod = subsets_[static_cast<size_t>(n) + 1];
    Matrix D(F, static_cast<int>(cod.size()) * dm, static_cast<int>(dom.size()) * dm);
    for (size_t ti = 0; ti < cod.size(); ++ti) {
      const auto& T = cod[ti];
      // module action terms
      for (size_t i = 0; i < T.size(); ++i) {
        std::vector<int> S = T;
        S.erase(S.begin() + static_cast<std::ptrdiff_t>(i));
        int col_block = subset_index(dom, S);
        const Matrix& act = M.rho_basis(T[i]);
        Fel sign = (i % 2 == 0) ? F.one() : F.neg(F.one());
        for (int r = 0; r < dm; ++r)
          for (int c = 0; c < dm; ++c) {
            Fel v = F.mul(sign, act.get(r, c));
            if (F.is_zero(v)) continue;
            int row = static_cast<int>(ti) * dm + r;
            int col = col_block * dm + c;
            D.set(row, col, F.add(D.get(row, col), v));
          }
      }
      // bracket contraction terms
      for (size_t i = 0; i < T.size(); ++i)
        for (size_t j = i + 1; j < T.size(); ++j) {
          std::vector<int> R = T;
          R.erase(R.begin() + static_cast<std::ptrdiff_t>(j));
          R.erase(R.begin() + static_cast<std::ptrdiff_t>(i));
          const Vec& w = L.bracket_basis(T[i], T[j]);
          Fel sign = ((i + j) % 2 == 0) ? F.one() : F.neg(F.one());
          for (int kgen = 0; kgen < d; ++kgen) {
            if (F.is_zero(w[static_cast<size_t>(kgen)])) continue;
            if (std::find(R.begin(), R.end(), kgen) != R.end()) continue;
            std::vector<int> S = R;
            auto pos = std::lower_bound(S.begin(), S.end(), kgen);
            int shift = static_cast<int>(pos - S.begin());
            S.insert(pos, kgen);
            Fel v = F.mul(sign, w[static_cast<size_t>(kgen)]);
            if (shift % 2 == 1) v = F.neg(v);
            int col_block = subset_index(dom, S);
            for (int r = 0; r < dm; ++r) {
              int row = static_cast<int>(ti) * dm + r;
              int col = col_block * dm + r;
              D.set(row, col, F.add(D.get(row, col), v));
            }
          }
        }
    }
    d_.push_back(std::move(D));
  }
}

int CEComplex::cochain_dim(int n) const {
  if (n < 0 || n > L_.dim()) return 0;
  return binomial(L_.dim(), n) * M_.dim();
}

const Matrix& CEComplex::differential(int n) const { return d_[static_cast<size_t>(n)]; }

int CEComplex::cohomology_dim(int n) const {
  if (n < 0 || n > L_.dim()) return 0;
  int nullity = cochain_dim(n) - rank_of(d_[static_cast<size_t>(n)]);
  int boundary = (n == 0) ? 0 : rank_of(d_[static_cast<size_t>(n) - 1]);
  return nullity - boundary;
}

std::vector<int> CEComplex::cohomology_dims(int max_degree) const {
  std::vector<int> out;
  for (int n = 0; n <= max_degree; ++n) out.push_back(cohomology_dim(n));
  return out;
}

bool CEComplex::euler_check() const {
  int lhs = 0, rhs = 0;
  for (int n = 0; n <= L_.dim(); ++n) {
    int sign = (n % 2 == 0) ? 1 : -1;
    lhs += sign * cochain_dim(n);
    rhs += sign * cohomology_dim(n);
  }
  return lhs == rhs;
}

bool CEComplex::composite_is_zero() const {
  for (size_t n = 0; n + 1 < d_.size(); ++n)
    if (!d_[n + 1].mul(d_[n]).is_zero()) return false;
  return true;
}

int ce_cohomology_dim(const LiePAlgebra& L, const RestrictedModule& M, int n) {
  if (n > L.dim()) return 0;
  return CEComplex(L, M).cohomology_dim(n);
}

bool ce_euler_check(const LiePAlgebra& L, const RestrictedModule& M) {
  return CEComplex(L, M).euler_check();
}

}  // namespace liepcd
