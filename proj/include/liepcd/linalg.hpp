#ifndef LIEPCD_LINALG_HPP
#define LIEPCD_LINALG_HPP

#include <optional>
#include <vector>

#include "liepcd/gf.hpp"

namespace liepcd {

using Vec = std::vector<Fel>;

Vec vec_zero(const Field& F, int n);
Vec basis_vec(const Field& F, int n, int i);
Vec vec_add(const Field& F, const Vec& a, const Vec& b);
Vec vec_sub(const Field& F, const Vec& a, const Vec& b);
Vec vec_scale(const Field& F, const Fel& s, const Vec& a);
bool vec_is_zero(const Field& F, const Vec& a);

/// Dense row-major matrix over a Field.  Entries are stored flattened with a
/// k-coefficient stride so elimination loops stay tight.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& F, int rows, int cols);  // zero matrix
  static Matrix identity(const Field& F, int n);
  static Matrix from_rows(const Field& F, const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return F_; }

  Fel get(int r, int c) const;
  void set(int r, int c, const Fel& v);
  int64_t* at(int r, int c) { return data_.data() + (static_cast<size_t>(r) * cols_ + c) * F_.k(); }
  const int64_t* at(int r, int c) const {
    return data_.data() + (static_cast<size_t>(r) * cols_ + c) * F_.k();
  }

  Matrix mul(const Matrix& B) const;
  Vec mul_vec(const Vec& v) const;      // A * v, column convention
  Vec mul_row(const Vec& v) const;      // v * A
  Matrix pow(int e) const;              // square matrices
  Matrix transpose() const;
  Matrix add(const Matrix& B) const;
  Matrix sub(const Matrix& B) const;
  Matrix scale(const Fel& s) const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;

  Vec row(int r) const;
  Vec col(int c) const;

 private:
  Field F_;
  int rows_ = 0, cols_ = 0;
  std::vector<int64_t> data_;
};

struct RrefResult {
  Matrix rref;
  int rank = 0;
  std::vector<int> pivot_columns;
  std::vector<Vec> kernel_basis;  // A * v = 0, linearly independent
};

RrefResult rref_full(const Matrix& A);
int rank_of(const Matrix& A);

/// Some solution of A x = b, or nullopt when b is outside the column space.
std::optional<Vec> solve(const Matrix& A, const Vec& b);

/// Basis of { v : A * v^(sigma) = 0 } with sigma the p^m-power Frobenius
/// applied entrywise; computed by linearizing over the prime field.
std::vector<Vec> semilinear_kernel(const Matrix& A, int frobenius_power);

/// Incrementally maintained reduced row space; used for closures and for
/// picking independent generators in deterministic order.
class RowSpan {
 public:
  RowSpan(const Field& F, int n) : F_(F), n_(n) {}

  bool add(Vec v);  // true if the dimension grew
  bool contains(Vec v) const;
  /// Coefficients of v on basis() rows; nullopt if v is outside the span.
  std::optional<Vec> coordinates(const Vec& v) const;

  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return n_; }
  const std::vector<Vec>& basis() const { return rows_; }

 private:
  Field F_;
  int n_;
  std::vector<Vec> rows_;     // fully reduced, sorted by pivot
  std::vector<int> pivots_;
  void reduce_(Vec& v, Vec* coords) const;
};

}  // namespace liepcd

#endif
