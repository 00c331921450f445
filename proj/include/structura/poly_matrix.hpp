#pragma once

#include <string>
#include <vector>

#include "structura/poly.hpp"

namespace structura {

/// Dense matrix over Q, used for leading-coefficient matrices and evaluations.
struct QMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> data;

  QMatrix() = default;
  QMatrix(int m, int n) : rows(m), cols(n), data(static_cast<size_t>(m) * n, Rat(0)) {}

  Rat& operator()(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  const Rat& operator()(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
};

int rank(QMatrix a);
/// Basis of {x : a x = 0}, one vector per free column of the reduced row
/// echelon form.
std::vector<std::vector<Rat>> nullspace(QMatrix a);
/// Some x with a x = b, or an empty vector when none exists.
std::vector<Rat> solve(const QMatrix& a, const std::vector<Rat>& b, bool* ok);

/// Dense m×n matrix of polynomials, row-major. Zero rows or columns are
/// allowed so that empty null-space bases have a representation.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int m, int n) : m_(m), n_(n), e_(static_cast<size_t>(m) * n) {}
  PolyMatrix(int m, int n, std::vector<Poly> entries);
  /// Row-major nested initialisation; every row must have the same length.
  static PolyMatrix from_rows(const std::vector<std::vector<Poly>>& rows);
  static PolyMatrix identity(int n);
  static PolyMatrix from_constant(const QMatrix& c);

  int rows() const { return m_; }
  int cols() const { return n_; }

  Poly& operator()(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const Poly& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
  const std::vector<Poly>& entries() const { return e_; }

  /// Max entry degree; NEG_INF for the zero matrix.
  int degree() const;
  bool is_zero() const;
  /// Degree of column j (NEG_INF if the column vanishes).
  int column_degree(int j) const;
  std::vector<int> column_degrees() const;
  /// Matrix coefficient of s^k.
  QMatrix coefficient(int k) const;
  /// Highest-column-degree coefficient matrix P_h.
  QMatrix leading_column_matrix() const;
  QMatrix evaluate(const Rat& x) const;

  PolyMatrix transpose() const;
  PolyMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  PolyMatrix column_block(int first, int count) const;
  PolyMatrix row_block(int first, int count) const;
  PolyMatrix select_columns(const std::vector<int>& cols) const;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  /// row[dst] += f · row[src]
  void add_row_multiple(int dst, int src, const Poly& f);
  /// col[dst] += f · col[src]
  void add_col_multiple(int dst, int src, const Poly& f);
  void scale_row(int i, const Rat& c);
  void scale_col(int j, const Rat& c);

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.e_ == b.e_;
  }
  friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<Poly> e_;
};

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator*(const Poly& f, const PolyMatrix& a);

/// Horizontal concatenation [a b].
PolyMatrix hconcat(const PolyMatrix& a, const PolyMatrix& b);
/// Block diagonal diag(a, b).
PolyMatrix block_diag(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix diag(const std::vector<Poly>& d);

/// Determinant: cofactor expansion up to 4×4, Bareiss elimination above.
Poly det(const PolyMatrix& a);
/// Rank over Q(s). Exact: evaluates at min(m,n)·deg + 1 distinct points.
int rank(const PolyMatrix& a);
/// Determinant is a nonzero constant.
bool is_unimodular(const PolyMatrix& a);
/// Inverse of a unimodular matrix via the adjugate.
PolyMatrix unimodular_inverse(const PolyMatrix& a);
/// Adjugate (transpose of the cofactor matrix).
PolyMatrix adjugate(const PolyMatrix& a);

std::string to_string(const PolyMatrix& a);

}  // namespace structura
