#include "liepcd/linalg.hpp"

#include <algorithm>

namespace liepcd {

Vec vec_zero(const Field& F, int n) { return Vec(static_cast<size_t>(n), F.zero()); }

Vec basis_vec(const Field& F, int n, int i) {
  Vec v = vec_zero(F, n);
  v[static_cast<size_t>(i)] = F.one();
  return v;
}

Vec vec_add(const Field& F, const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = F.add(a[i], b[i]);
  return c;
}

Vec vec_sub(const Field& F, const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = F.sub(a[i], b[i]);
  return c;
}

Vec vec_scale(const Field& F, const Fel& s, const Vec& a) {
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = F.mul(s, a[i]);
  return c;
}

bool vec_is_zero(const Field& F, const Vec& a) {
  for (const auto& x : a)
    if (!F.is_zero(x)) return false;
  return true;
}

Matrix::Matrix(const Field& F, int rows, int cols)
    : F_(F), rows_(rows), cols_(cols),
      data_(static_cast<size_t>(rows) * cols * F.k(), 0) {}

Matrix Matrix::identity(const Field& F, int n) {
  Matrix I(F, n, n);
  for (int i = 0; i < n; ++i) I.set(i, i, F.one());
  return I;
}

Matrix Matrix::from_rows(const Field& F, const std::vector<Vec>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  Matrix A(F, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) A.set(i, j, rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  return A;
}

Fel Matrix::get(int r, int c) const {
  const int64_t* p = at(r, c);
  return Fel(p, p + F_.k());
}

void Matrix::set(int r, int c, const Fel& v) {
  std::copy(v.begin(), v.end(), at(r, c));
}

Matrix Matrix::mul(const Matrix& B) const {
  if (F_ != B.F_) throw FieldMismatch("matrix product across fields");
  if (cols_ != B.rows_) throw Error("ShapeMismatch", "matrix product shapes");
  Matrix C(F_, rows_, B.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int l = 0; l < cols_; ++l) {
      const int64_t* a = at(i, l);
      bool zero = true;
      for (int t = 0; t < F_.k(); ++t)
        if (a[t]) { zero = false; break; }
      if (zero) continue;
      for (int j = 0; j < B.cols_; ++j) F_.acc_mul(C.at(i, j), a, B.at(l, j));
    }
  return C;
}

Vec Matrix::mul_vec(const Vec& v) const {
  Vec out = vec_zero(F_, rows_);
  for (int i = 0; i < rows_; ++i) {
    Fel acc = F_.zero();
    for (int j = 0; j < cols_; ++j) acc = F_.add(acc, F_.mul(get(i, j), v[static_cast<size_t>(j)]));
    out[static_cast<size_t>(i)] = acc;
  }
  return out;
}

Vec Matrix::mul_row(const Vec& v) const {
  Vec out = vec_zero(F_, cols_);
  for (int j = 0; j < cols_; ++j) {
    Fel acc = F_.zero();
    for (int i = 0; i < rows_; ++i) acc = F_.add(acc, F_.mul(v[static_cast<size_t>(i)], get(i, j)));
    out[static_cast<size_t>(j)] = acc;
  }
  return out;
}

Matrix Matrix::pow(int e) const {
  if (rows_ != cols_) throw NonSquare("matrix power");
  Matrix r = identity(F_, rows_);
  for (int i = 0; i < e; ++i) r = r.mul(*this);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix T(F_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) T.set(j, i, get(i, j));
  return T;
}

Matrix Matrix::add(const Matrix& B) const {
  Matrix C(F_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i)
    C.data_[i] = (data_[i] + B.data_[i]) % F_.p();
  return C;
}

Matrix Matrix::sub(const Matrix& B) const {
  Matrix C(F_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i)
    C.data_[i] = ((data_[i] - B.data_[i]) % F_.p() + F_.p()) % F_.p();
  return C;
}

Matrix Matrix::scale(const Fel& s) const {
  Matrix C(F_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) C.set(i, j, F_.mul(s, get(i, j)));
  return C;
}

bool Matrix::is_zero() const {
  for (int64_t v : data_)
    if (v) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return F_ == o.F_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Vec Matrix::row(int r) const {
  Vec v(static_cast<size_t>(cols_));
  for (int j = 0; j < cols_; ++j) v[static_cast<size_t>(j)] = get(r, j);
  return v;
}

Vec Matrix::col(int c) const {
  Vec v(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) v[static_cast<size_t>(i)] = get(i, c);
  return v;
}

namespace {

// In-place reduction to RREF; returns pivot columns.  First-nonzero pivot
// scan, exact field arithmetic.
std::vector<int> rref_inplace(Matrix& A) {
  const Field& F = A.field();
  const int k = F.k();
  std::vector<int> pivots;
  int row = 0;
  std::vector<int64_t> tmp(static_cast<size_t>(k));
  for (int col = 0; col < A.cols() && row < A.rows(); ++col) {
    int pr = -1;
    for (int r = row; r < A.rows(); ++r) {
      const int64_t* e = A.at(r, col);
      for (int t = 0; t < k; ++t)
        if (e[t]) { pr = r; break; }
      if (pr >= 0) break;
    }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < A.cols(); ++j)
        std::swap_ranges(A.at(pr, j), A.at(pr, j) + k, A.at(row, j));
    Fel piv = A.get(row, col);
    if (!F.is_one(piv)) {
      Fel inv = F.inv(piv);
      for (int j = col; j < A.cols(); ++j) F.mul_span(A.at(row, j), A.at(row, j), inv.data());
    }
    for (int r = 0; r < A.rows(); ++r) {
      if (r == row) continue;
      const int64_t* f = A.at(r, col);
      bool zero = true;
      for (int t = 0; t < k; ++t)
        if (f[t]) { zero = false; break; }
      if (zero) continue;
      Fel factor = F.neg(A.get(r, col));
      for (int j = col; j < A.cols(); ++j) {
        F.mul_span(tmp.data(), factor.data(), A.at(row, j));
        int64_t* out = A.at(r, j);
        for (int t = 0; t < k; ++t) out[t] = (out[t] + tmp[static_cast<size_t>(t)]) % F.p();
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RrefResult rref_full(const Matrix& A) {
  RrefResult res;
  res.rref = A;
  res.pivot_columns = rref_inplace(res.rref);
  res.rank = static_cast<int>(res.pivot_columns.size());
  const Field& F = A.field();
  // free columns parametrize the kernel
  std::vector<bool> is_pivot(static_cast<size_t>(A.cols()), false);
  for (int c : res.pivot_columns) is_pivot[static_cast<size_t>(c)] = true;
  for (int free = 0; free < A.cols(); ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    Vec v = vec_zero(F, A.cols());
    v[static_cast<size_t>(free)] = F.one();
    for (int r = 0; r < res.rank; ++r)
      v[static_cast<size_t>(res.pivot_columns[static_cast<size_t>(r)])] =
          F.neg(res.rref.get(r, free));
    res.kernel_basis.push_back(std::move(v));
  }
  return res;
}

int rank_of(const Matrix& A) {
  Matrix B = A;
  return static_cast<int>(rref_inplace(B).size());
}

std::optional<Vec> solve(const Matrix& A, const Vec& b) {
  const Field& F = A.field();
  Matrix aug(F, A.rows(), A.cols() + 1);
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) aug.set(i, j, A.get(i, j));
    aug.set(i, A.cols(), b[static_cast<size_t>(i)]);
  }
  auto pivots = rref_inplace(aug);
  for (size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] == A.cols()) return std::nullopt;  // inconsistent
  Vec x = vec_zero(F, A.cols());
  for (size_t r = 0; r < pivots.size(); ++r)
    x[static_cast<size_t>(pivots[r])] = aug.get(static_cast<int>(r), A.cols());
  return x;
}

std::vector<Vec> semilinear_kernel(const Matrix& A, int frobenius_power) {
  if (A.rows() != A.cols()) throw NonSquare("semilinear kernel needs a square matrix");
  const Field& F = A.field();
  const int n = A.rows(), k = F.k();
  Field Fp = Field::make(F.p(), 1);

  // frobenius as a GF(p)-linear map on F: column j = coeffs of (t^j)^(p^m)
  std::vector<Fel> frob_cols(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) {
    Fel tj = F.zero();
    tj[static_cast<size_t>(j)] = 1;
    frob_cols[static_cast<size_t>(j)] = F.frobenius(tj, frobenius_power);
  }

  // big prime-field matrix of v -> A * v^(sigma)
  Matrix B(Fp, n * k, n * k);
  for (int r = 0; r < n; ++r)
    for (int i = 0; i < n; ++i) {
      Fel a = A.get(r, i);
      if (F.is_zero(a)) continue;
      for (int j = 0; j < k; ++j) {
        Fel img = F.mul(a, frob_cols[static_cast<size_t>(j)]);
        for (int s = 0; s < k; ++s)
          B.set(r * k + s, i * k + j, Fel{img[static_cast<size_t>(s)]});
      }
    }

  auto res = rref_full(B);
  // lift prime-field kernel vectors to F^n, then reduce to an F-basis
  RowSpan span(F, n);
  std::vector<Vec> basis;
  for (const auto& pv : res.kernel_basis) {
    Vec v = vec_zero(F, n);
    for (int i = 0; i < n; ++i) {
      Fel e = F.zero();
      for (int j = 0; j < k; ++j) e[static_cast<size_t>(j)] = pv[static_cast<size_t>(i * k + j)][0];
      v[static_cast<size_t>(i)] = e;
    }
    if (span.add(v)) basis.push_back(std::move(v));
  }
  return basis;
}

void RowSpan::reduce_(Vec& v, Vec* coords) const {
  if (coords) *coords = vec_zero(F_, dim());
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Fel& c = v[static_cast<size_t>(pivots_[r])];
    if (F_.is_zero(c)) continue;
    if (coords) (*coords)[r] = c;
    Fel factor = c;
    for (int j = pivots_[r]; j < n_; ++j)
      v[static_cast<size_t>(j)] =
          F_.sub(v[static_cast<size_t>(j)], F_.mul(factor, rows_[r][static_cast<size_t>(j)]));
  }
}

bool RowSpan::add(Vec v) {
  reduce_(v, nullptr);
  int piv = -1;
  for (int j = 0; j < n_; ++j)
    if (!F_.is_zero(v[static_cast<size_t>(j)])) { piv = j; break; }
  if (piv < 0) return false;
  Fel inv = F_.inv(v[static_cast<size_t>(piv)]);
  for (int j = piv; j < n_; ++j) v[static_cast<size_t>(j)] = F_.mul(inv, v[static_cast<size_t>(j)]);
  // back-reduce existing rows so stored coordinates stay canonical
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Fel& c = rows_[r][static_cast<size_t>(piv)];
    if (F_.is_zero(c)) continue;
    Fel factor = c;
    for (int j = piv; j < n_; ++j)
      rows_[r][static_cast<size_t>(j)] =
          F_.sub(rows_[r][static_cast<size_t>(j)], F_.mul(factor, v[static_cast<size_t>(j)]));
  }
  auto it = std::upper_bound(pivots_.begin(), pivots_.end(), piv);
  size_t pos = static_cast<size_t>(it - pivots_.begin());
  pivots_.insert(it, piv);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  return true;
}

bool RowSpan::contains(Vec v) const {
  reduce_(v, nullptr);
  return vec_is_zero(F_, v);
}

std::optional<Vec> RowSpan::coordinates(const Vec& v) const {
  Vec w = v, coords;
  reduce_(w, &coords);
  if (!vec_is_zero(F_, w)) return std::nullopt;
  return coords;
}

}  // namespace liepcd
