#include "liepcd/uenv.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace liepcd {

namespace {

void sparse_acc(const Field& F, std::map<int, Fel>& acc, int idx, const Fel& c) {
  auto it = acc.find(idx);
  if (it == acc.end()) {
    acc.emplace(idx, c);
  } else {
    it->second = F.add(it->second, c);
    if (F.is_zero(it->second)) acc.erase(it);
  }
}

SparseVec to_sparse(const Field& F, const std::map<int, Fel>& acc) {
  SparseVec out;
  out.reserve(acc.size());
  for (const auto& [i, c] : acc)
    if (!F.is_zero(c)) out.emplace_back(i, c);
  return out;
}

// Straighten a generator word into the PBW monomial basis.  Rewrites the
// leftmost out-of-order adjacent pair first; runs of p equal generators
// collapse through the p-map.  Terminates by (length, inversions).
struct Straightener {
  const LiePAlgebra& L;
  const Field& F;
  int64_t p;
  std::vector<uint64_t> weights;  // mixed radix: index of a sorted word

  explicit Straightener(const LiePAlgebra& Lie)
      : L(Lie), F(Lie.field()), p(Lie.field().p()) {
    weights.assign(static_cast<size_t>(L.dim()), 0);
    uint64_t w = 1;
    for (int i = L.dim() - 1; i >= 0; --i) {
      weights[static_cast<size_t>(i)] = w;
      w *= static_cast<uint64_t>(p);
    }
  }

  uint64_t monomial_index(const std::vector<int>& word) const {
    uint64_t idx = 0;
    for (int g : word) idx += weights[static_cast<size_t>(g)];
    return idx;
  }

  void run(std::vector<int> word, Fel coeff, std::map<int, Fel>& acc) const {
    std::vector<std::pair<std::vector<int>, Fel>> stack;
    stack.emplace_back(std::move(word), std::move(coeff));
    while (!stack.empty()) {
      auto [w, c] = std::move(stack.back());
      stack.pop_back();
      // leftmost inversion
      int inv = -1;
      for (size_t t = 0; t + 1 < w.size(); ++t)
        if (w[t] > w[t + 1]) {
          inv = static_cast<int>(t);
          break;
        }
      if (inv >= 0) {
        int a = w[static_cast<size_t>(inv)], b = w[static_cast<size_t>(inv) + 1];
        std::vector<int> swapped = w;
        std::swap(swapped[static_cast<size_t>(inv)], swapped[static_cast<size_t>(inv) + 1]);
        const Vec& br = L.bracket_basis(a, b);
        for (int k = 0; k < L.dim(); ++k) {
          if (F.is_zero(br[static_cast<size_t>(k)])) continue;
          std::vector<int> shorter;
          shorter.reserve(w.size() - 1);
          shorter.insert(shorter.end(), w.begin(), w.begin() + inv);
          shorter.push_back(k);
          shorter.insert(shorter.end(), w.begin() + inv + 2, w.end());
          stack.emplace_back(std::move(shorter), F.mul(c, br[static_cast<size_t>(k)]));
        }
        stack.emplace_back(std::move(swapped), std::move(c));
        continue;
      }
      // sorted: collapse the first run of length p
      int run_at = -1;
      for (size_t t = 0; t + static_cast<size_t>(p) <= w.size(); ++t) {
        bool run = true;
        for (int64_t s = 1; s < p; ++s)
          if (w[t + static_cast<size_t>(s)] != w[t]) {
            run = false;
            break;
          }
        if (run) {
          run_at = static_cast<int>(t);
          break;
        }
      }
      if (run_at >= 0) {
        int g = w[static_cast<size_t>(run_at)];
        const Vec& pp = L.pmap_basis(g);
        for (int k = 0; k < L.dim(); ++k) {
          if (F.is_zero(pp[static_cast<size_t>(k)])) continue;
          std::vector<int> shorter;
          shorter.reserve(w.size() - static_cast<size_t>(p) + 1);
          shorter.insert(shorter.end(), w.begin(), w.begin() + run_at);
          shorter.push_back(k);
          shorter.insert(shorter.end(), w.begin() + run_at + static_cast<std::ptrdiff_t>(p), w.end());
          stack.emplace_back(std::move(shorter), F.mul(c, pp[static_cast<size_t>(k)]));
        }
        continue;  // e_g^p itself is consumed
      }
      sparse_acc(F, acc, static_cast<int>(monomial_index(w)), c);
    }
  }
};

}  // namespace

AssocAlgebra AssocAlgebra::uenv(const LiePAlgebra& L, uint64_t dim_guard,
                                uint64_t assoc_seed) {
  const Field& F = L.field();
  const int d = L.dim();
  const int64_t p = F.p();
  uint64_t dim_a = 1;
  for (int i = 0; i < d; ++i) {
    dim_a *= static_cast<uint64_t>(p);
    if (dim_a > dim_guard)
      throw DimensionGuard("dim u(L) = p^" + std::to_string(d) + " exceeds the guard " +
                           std::to_string(dim_guard));
  }
  AssocAlgebra A;
  A.F_ = F;
  A.dim_ = static_cast<int>(dim_a);
  A.unit_ = 0;
  Straightener st(L);
  // exponent tuples in lex order = mixed-radix order with the last index fastest
  A.exps_.resize(dim_a);
  A.labels_.resize(dim_a);
  for (uint64_t m = 0; m < dim_a; ++m) {
    std::vector<int> e(static_cast<size_t>(d), 0);
    uint64_t t = m;
    for (int i = d - 1; i >= 0; --i) {
      e[static_cast<size_t>(i)] = static_cast<int>(t % static_cast<uint64_t>(p));
      t /= static_cast<uint64_t>(p);
    }
    std::ostringstream lbl;
    bool any = false;
    for (int i = 0; i < d; ++i)
      if (e[static_cast<size_t>(i)] > 0) {
        if (any) lbl << "*";
        any = true;
        lbl << L.basis_names()[static_cast<size_t>(i)];
        if (e[static_cast<size_t>(i)] > 1) lbl << "^" << e[static_cast<size_t>(i)];
      }
    A.labels_[m] = any ? lbl.str() : "1";
    A.exps_[m] = std::move(e);
  }
  auto word_of = [&](uint64_t m) {
    std::vector<int> w;
    for (int i = 0; i < d; ++i)
      for (int c = 0; c < A.exps_[m][static_cast<size_t>(i)]; ++c) w.push_back(i);
    return w;
  };
  A.table_.assign(dim_a, std::vector<SparseVec>(dim_a));
  for (uint64_t a = 0; a < dim_a; ++a) {
    std::vector<int> wa = word_of(a);
    for (uint64_t b = 0; b < dim_a; ++b) {
      std::vector<int> w = wa;
      std::vector<int> wb = word_of(b);
      w.insert(w.end(), wb.begin(), wb.end());
      std::map<int, Fel> acc;
      st.run(std::move(w), F.one(), acc);
      A.table_[a][b] = to_sparse(F, acc);
    }
  }
  A.augmentation_ = vec_zero(F, A.dim_);
  A.augmentation_[0] = F.one();
  A.verify_associativity_(assoc_seed);
  return A;
}

AssocAlgebra AssocAlgebra::poly_quotient(const Field& F, const Poly& f) {
  if (f.is_zero()) throw ZeroPolynomial("quotient by the zero polynomial");
  if (f.deg() < 1) throw InvalidParams("quotient by a unit");
  Poly fm = poly_monic(F, f);
  int m = fm.deg();
  AssocAlgebra A;
  A.F_ = F;
  A.dim_ = m;
  A.unit_ = 0;
  A.table_.assign(static_cast<size_t>(m), std::vector<SparseVec>(static_cast<size_t>(m)));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      // x^a * x^b mod f
      std::vector<Fel> c(static_cast<size_t>(a + b) + 1, F.zero());
      c[static_cast<size_t>(a + b)] = F.one();
      Poly r = poly_mod(F, poly_make(F, std::move(c)), fm);
      SparseVec sv;
      for (int i = 0; i <= r.deg(); ++i)
        if (!F.is_zero(r.c[static_cast<size_t>(i)])) sv.emplace_back(i, r.c[static_cast<size_t>(i)]);
      A.table_[static_cast<size_t>(a)][static_cast<size_t>(b)] = std::move(sv);
    }
  for (int i = 0; i < m; ++i)
    A.labels_.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
  return A;
}

void AssocAlgebra::verify_associativity_(uint64_t seed) const {
  auto check_triple = [&](int a, int b, int c) {
    // (a*b)*c
    std::map<int, Fel> lhs, rhs;
    for (const auto& [m, cm] : product(a, b))
      for (const auto& [r, cr] : product(m, c)) sparse_acc(F_, lhs, r, F_.mul(cm, cr));
    for (const auto& [m, cm] : product(b, c))
      for (const auto& [r, cr] : product(a, m)) sparse_acc(F_, rhs, r, F_.mul(cm, cr));
    return to_sparse(F_, lhs) == to_sparse(F_, rhs);
  };
  if (dim_ <= 64) {
    for (int a = 0; a < dim_; ++a)
      for (int b = 0; b < dim_; ++b)
        for (int c = 0; c < dim_; ++c)
          if (!check_triple(a, b, c))
            throw Error("InternalError", "straightening is not associative");
  } else {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 200; ++t) {
      int a = static_cast<int>(rng() % static_cast<uint64_t>(dim_));
      int b = static_cast<int>(rng() % static_cast<uint64_t>(dim_));
      int c = static_cast<int>(rng() % static_cast<uint64_t>(dim_));
      if (!check_triple(a, b, c))
        throw Error("InternalError", "straightening is not associative");
    }
  }
}

Vec AssocAlgebra::multiply(const Vec& a, const Vec& b) const {
  Vec out = vec_zero(F_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (F_.is_zero(a[static_cast<size_t>(i)])) continue;
    for (int j = 0; j < dim_; ++j) {
      if (F_.is_zero(b[static_cast<size_t>(j)])) continue;
      Fel c = F_.mul(a[static_cast<size_t>(i)], b[static_cast<size_t>(j)]);
      for (const auto& [r, cr] : product(i, j))
        out[static_cast<size_t>(r)] = F_.add(out[static_cast<size_t>(r)], F_.mul(c, cr));
    }
  }
  return out;
}

Matrix AssocAlgebra::left_mult_matrix(const Vec& a) const {
  Matrix M(F_, dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int i = 0; i < dim_; ++i) {
      if (F_.is_zero(a[static_cast<size_t>(i)])) continue;
      for (const auto& [r, cr] : product(i, j))
        M.set(r, j, F_.add(M.get(r, j), F_.mul(a[static_cast<size_t>(i)], cr)));
    }
  return M;
}

Matrix AssocAlgebra::right_mult_matrix(const Vec& a) const {
  Matrix M(F_, dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int i = 0; i < dim_; ++i) {
      if (F_.is_zero(a[static_cast<size_t>(i)])) continue;
      for (const auto& [r, cr] : product(j, i))
        M.set(r, j, F_.add(M.get(r, j), F_.mul(a[static_cast<size_t>(i)], cr)));
    }
  return M;
}

Vec AssocAlgebra::element_pow(const Vec& a, uint64_t e) const {
  Vec r = basis_vec(F_, dim_, unit_);
  Vec b = a;
  while (e) {
    if (e & 1) r = multiply(r, b);
    e >>= 1;
    if (e) b = multiply(b, b);
  }
  return r;
}

bool AssocAlgebra::is_commutative() const {
  for (int a = 0; a < dim_; ++a)
    for (int b = a + 1; b < dim_; ++b)
      if (product(a, b) != product(b, a)) return false;
  return true;
}

// --- free resolutions --------------------------------------------------------

namespace {

// generators of u(L) inside the PBW basis: the pure e_i monomials
std::vector<int> algebra_generator_indices(const AssocAlgebra& A) {
  std::vector<int> out;
  for (int m = 0; m < A.dim(); ++m) {
    const auto& e = A.exponents(m);
    int total = 0;
    for (int x : e) total += x;
    if (total == 1) out.push_back(m);
  }
  return out;
}

}  // namespace

FreeResolution build_free_resolution(const AssocAlgebra& A, int stages) {
  if (!A.has_augmentation())
    throw InvalidParams("free resolution needs an augmented algebra");
  const Field& F = A.field();
  const int da = A.dim();
  FreeResolution R;
  R.A = std::make_shared<AssocAlgebra>(A);
  R.ranks.push_back(1);

  std::vector<int> gens_idx = algebra_generator_indices(A);
  std::vector<Matrix> left_gen;  // left multiplication by each generator
  for (int g : gens_idx) left_gen.push_back(A.left_mult_matrix(basis_vec(F, da, g)));

  // stage 0: epsilon
  Matrix eps(F, 1, da);
  for (int j = 0; j < da; ++j) eps.set(0, j, A.augmentation()[static_cast<size_t>(j)]);
  auto res = rref_full(eps);
  R.boundary_rank.push_back(res.rank);
  R.kernel_dim.push_back(static_cast<int>(res.kernel_basis.size()));
  std::vector<Vec> kernel = std::move(res.kernel_basis);

  for (int stage = 1; stage <= stages; ++stage) {
    int n_prev = R.ranks.back();
    // greedy module generators of the kernel, in RREF pivot order
    RowSpan closure(F, n_prev * da);
    std::vector<Vec> gens;
    auto apply_block_left = [&](const Matrix& Lg, const Vec& v) {
      Vec out = vec_zero(F, n_prev * da);
      for (int blk = 0; blk < n_prev; ++blk) {
        Vec piece(v.begin() + static_cast<std::ptrdiff_t>(blk) * da,
                  v.begin() + static_cast<std::ptrdiff_t>(blk + 1) * da);
        Vec img = Lg.mul_vec(piece);
        for (int j = 0; j < da; ++j) out[static_cast<size_t>(blk * da + j)] = img[static_cast<size_t>(j)];
      }
      return out;
    };
    for (const Vec& v : kernel) {
      if (closure.contains(v)) continue;
      gens.push_back(v);
      std::vector<Vec> queue = {v};
      closure.add(v);
      while (!queue.empty()) {
        Vec w = std::move(queue.back());
        queue.pop_back();
        for (const Matrix& Lg : left_gen) {
          Vec img = apply_block_left(Lg, w);
          if (closure.add(img)) queue.push_back(img);
        }
      }
    }
    int n_cur = static_cast<int>(gens.size());
    R.ranks.push_back(n_cur);
    R.generators.push_back(gens);
    // K-linear boundary: column (r, m) = monomial_m * gens[r]
    Matrix D(F, n_prev * da, n_cur * da);
    for (int r = 0; r < n_cur; ++r)
      for (int s = 0; s < n_prev; ++s) {
        Vec comp(gens[static_cast<size_t>(r)].begin() + static_cast<std::ptrdiff_t>(s) * da,
                 gens[static_cast<size_t>(r)].begin() + static_cast<std::ptrdiff_t>(s + 1) * da);
        if (vec_is_zero(F, comp)) continue;
        Matrix Rm = A.right_mult_matrix(comp);  // m -> m * comp
        for (int i = 0; i < da; ++i)
          for (int m = 0; m < da; ++m)
            D.set(s * da + i, r * da + m, Rm.get(i, m));
      }
    auto dres = rref_full(D);
    R.boundary_rank.push_back(dres.rank);
    R.kernel_dim.push_back(static_cast<int>(dres.kernel_basis.size()));
    kernel = std::move(dres.kernel_basis);
  }
  return R;
}

bool FreeResolution::exact() const {
  for (size_t i = 0; i + 1 < boundary_rank.size(); ++i)
    if (boundary_rank[i + 1] != kernel_dim[i]) return false;
  return true;
}

std::vector<int> ext_dims(const FreeResolution& R, const RestrictedModule& M,
                          int max_degree) {
  if (!M.restricted()) throw NotRestricted("Ext over u(L) needs a restricted module");
  if (max_degree + 1 > static_cast<int>(R.generators.size()))
    throw InvalidParams("resolution too short for the requested degree");
  const AssocAlgebra& A = *R.A;
  const Field& F = A.field();
  const int da = A.dim();
  const int dm = M.dim();
  const LiePAlgebra& L = M.algebra();
  // rho-hat on monomials: rho(e_1)^{a_1} ... rho(e_d)^{a_d}
  std::vector<Matrix> rho_mon(static_cast<size_t>(da), Matrix(F, dm, dm));
  for (int m = 0; m < da; ++m) {
    Matrix acc = Matrix::identity(F, dm);
    const auto& e = A.exponents(m);
    for (int i = 0; i < L.dim(); ++i)
      for (int c = 0; c < e[static_cast<size_t>(i)]; ++c) acc = acc.mul(M.rho_basis(i));
    rho_mon[static_cast<size_t>(m)] = std::move(acc);
  }
  auto rho_hat = [&](const Vec& a) {
    Matrix out(F, dm, dm);
    for (int m = 0; m < da; ++m)
      if (!F.is_zero(a[static_cast<size_t>(m)]))
        out = out.add(rho_mon[static_cast<size_t>(m)].scale(a[static_cast<size_t>(m)]));
    return out;
  };
  // delta_i : M^{n_i} -> M^{n_{i+1}}, block (r, s) = rho_hat((g_r)_s)
  std::vector<Matrix> delta;
  for (int i = 0; i + 1 < static_cast<int>(R.ranks.size()); ++i) {
    int n_i = R.ranks[static_cast<size_t>(i)];
    int n_next = R.ranks[static_cast<size_t>(i) + 1];
    Matrix Dl(F, n_next * dm, n_i * dm);
    for (int r = 0; r < n_next; ++r)
      for (int s = 0; s < n_i; ++s) {
        Vec comp(R.generators[static_cast<size_t>(i)][static_cast<size_t>(r)].begin() +
                     static_cast<std::ptrdiff_t>(s) * da,
                 R.generators[static_cast<size_t>(i)][static_cast<size_t>(r)].begin() +
                     static_cast<std::ptrdiff_t>(s + 1) * da);
        Matrix blk = rho_hat(comp);
        for (int x = 0; x < dm; ++x)
          for (int y = 0; y < dm; ++y) Dl.set(r * dm + x, s * dm + y, blk.get(x, y));
      }
    delta.push_back(std::move(Dl));
  }
  std::vector<int> out;
  for (int n = 0; n <= max_degree; ++n) {
    int dim_hom = R.ranks[static_cast<size_t>(n)] * dm;
    int nullity = dim_hom - rank_of(delta[static_cast<size_t>(n)]);
    int boundary = (n == 0) ? 0 : rank_of(delta[static_cast<size_t>(n) - 1]);
    out.push_back(nullity - boundary);
  }
  return out;
}

std::vector<int> ext_dims(const LiePAlgebra& L, const RestrictedModule& M,
                          int max_degree, uint64_t dim_guard) {
  AssocAlgebra A = AssocAlgebra::uenv(L, dim_guard);
  FreeResolution R = build_free_resolution(A, max_degree + 1);
  return ext_dims(R, M, max_degree);
}

int ext_dim(const LiePAlgebra& L, const RestrictedModule& M, int n,
            uint64_t dim_guard) {
  return ext_dims(L, M, n, dim_guard)[static_cast<size_t>(n)];
}

// --- Hochschild --------------------------------------------------------------

namespace {

uint64_t checked_pow(uint64_t base, int e, uint64_t guard) {
  uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > guard / base) throw DimensionGuard("bar complex dimension overflow");
    r *= base;
  }
  return r;
}

// delta^m : Hom(A^m, A) -> Hom(A^{m+1}, A) of the full bar complex
Matrix bar_differential(const AssocAlgebra& A, int m) {
  const Field& F = A.field();
  const uint64_t da = static_cast<uint64_t>(A.dim());
  uint64_t dom_tuples = checked_pow(da, m, 1000000);
  uint64_t cod_tuples = checked_pow(da, m + 1, 1000000);
  uint64_t rows64 = cod_tuples * da, cols64 = dom_tuples * da;
  if (rows64 * cols64 > 50000000ULL)
    throw DimensionGuard("bar differential too large");
  Matrix D(F, static_cast<int>(rows64), static_cast<int>(cols64));
  std::vector<int> U(static_cast<size_t>(m) + 1, 0);
  auto tuple_index = [&](const std::vector<int>& t) {
    uint64_t idx = 0;
    for (int x : t) idx = idx * da + static_cast<uint64_t>(x);
    return idx;
  };
  for (uint64_t u = 0; u < cod_tuples; ++u) {
    // decode u into U
    uint64_t t = u;
    for (int i = m; i >= 0; --i) {
      U[static_cast<size_t>(i)] = static_cast<int>(t % da);
      t /= da;
    }
    // a_1 . f(a_2..a_{m+1})
    {
      std::vector<int> tail(U.begin() + 1, U.end());
      uint64_t col_block = tuple_index(tail);
      for (int o = 0; o < A.dim(); ++o)
        for (const auto& [r, c] : A.product(U[0], o))
          D.set(static_cast<int>(u * da) + r, static_cast<int>(col_block * da) + o,
                F.add(D.get(static_cast<int>(u * da) + r,
                            static_cast<int>(col_block * da) + o),
                      c));
    }
    // (-1)^i f(a_1,..,a_i a_{i+1},..)
    for (int i = 1; i <= m; ++i) {
      Fel sign = (i % 2 == 0) ? F.one() : F.neg(F.one());
      for (const auto& [k, c] : A.product(U[static_cast<size_t>(i) - 1], U[static_cast<size_t>(i)])) {
        std::vector<int> T;
        T.reserve(static_cast<size_t>(m));
        for (int x = 0; x < i - 1; ++x) T.push_back(U[static_cast<size_t>(x)]);
        T.push_back(k);
        for (int x = i + 1; x <= m; ++x) T.push_back(U[static_cast<size_t>(x)]);
        uint64_t col_block = tuple_index(T);
        Fel v = F.mul(sign, c);
        for (int o = 0; o < A.dim(); ++o) {
          int row = static_cast<int>(u * da) + o;
          int col = static_cast<int>(col_block * da) + o;
          D.set(row, col, F.add(D.get(row, col), v));
        }
      }
    }
    // (-1)^{m+1} f(a_1..a_m) . a_{m+1}
    {
      std::vector<int> head(U.begin(), U.end() - 1);
      uint64_t col_block = tuple_index(head);
      Fel sign = ((m + 1) % 2 == 0) ? F.one() : F.neg(F.one());
      for (int o = 0; o < A.dim(); ++o)
        for (const auto& [r, c] : A.product(o, U[static_cast<size_t>(m)])) {
          int row = static_cast<int>(u * da) + r;
          int col = static_cast<int>(col_block * da) + o;
          D.set(row, col, F.add(D.get(row, col), F.mul(sign, c)));
        }
    }
  }
  return D;
}

}  // namespace

int hochschild_dim(const AssocAlgebra& A, int n) {
  if (n < 0) throw InvalidParams("negative degree");
  checked_pow(static_cast<uint64_t>(A.dim()), n + 1, 1000000);
  Matrix dn = bar_differential(A, n);
  int cochain = dn.cols();
  int nullity = cochain - rank_of(dn);
  int boundary = 0;
  if (n > 0) boundary = rank_of(bar_differential(A, n - 1));
  return nullity - boundary;
}

int holm_periodic_hochschild(const Field& F, const Poly& f, int n) {
  if (f.is_zero()) throw ZeroPolynomial("periodic complex of the zero polynomial");
  if (f.deg() < 1) throw InvalidParams("quotient by a unit");
  if (n < 0) throw InvalidParams("negative degree");
  Poly fm = poly_monic(F, f);
  int m = fm.deg();
  if (n == 0) return m;
  // multiplication by f' on K[x]/(f)
  Poly fd = poly_derivative(F, fm);
  Matrix M(F, m, m);
  for (int j = 0; j < m; ++j) {
    std::vector<Fel> xj(static_cast<size_t>(j) + 1, F.zero());
    xj[static_cast<size_t>(j)] = F.one();
    Poly r = poly_mod(F, poly_mul(F, fd, poly_make(F, std::move(xj))), fm);
    for (int i = 0; i <= r.deg(); ++i) M.set(i, j, r.c[static_cast<size_t>(i)]);
  }
  return m - rank_of(M);
}

std::vector<Vec> nilradical(const AssocAlgebra& A) {
  if (!A.is_commutative()) throw NotCommutative("nilradical of a noncommutative algebra");
  const Field& F = A.field();
  const int da = A.dim();
  int m = 0;
  uint64_t pm = 1;
  while (pm < static_cast<uint64_t>(da)) {
    pm *= static_cast<uint64_t>(F.p());
    ++m;
  }
  if (m == 0) m = 1;
  // sigma: a -> a^p as a p-semilinear map; iterate to sigma^m
  Matrix S(F, da, da);
  for (int j = 0; j < da; ++j) {
    Vec aj = A.element_pow(basis_vec(F, da, j), static_cast<uint64_t>(F.p()));
    for (int i = 0; i < da; ++i) S.set(i, j, aj[static_cast<size_t>(i)]);
  }
  // sigma^m(v) = S * S^(p) * ... * S^(p^{m-1}) * v^(p^m)
  Matrix T = S;
  for (int step = 1; step < m; ++step) {
    Matrix Sf(F, da, da);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j) Sf.set(i, j, F.frobenius(S.get(i, j), step));
    T = T.mul(Sf);
  }
  return semilinear_kernel(T, m);
}

IsomCheck verify_isom_eq6(const LiePAlgebra& L, int n, uint64_t dim_guard) {
  if (!L.is_abelian())
    throw InvalidParams("the numerical check runs over abelian algebras only");
  AssocAlgebra A = AssocAlgebra::uenv(L, dim_guard);
  IsomCheck out;
  out.lhs_dim = hochschild_dim(A, n);
  FreeResolution R = build_free_resolution(A, n + 1);
  out.rhs_dim = A.dim() * ext_dims(R, trivial_module(L), n).back();
  out.equal = out.lhs_dim == out.rhs_dim;
  return out;
}

}  // namespace liepcd
