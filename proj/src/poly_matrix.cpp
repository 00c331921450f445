#include "structura/poly_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "structura/error.hpp"

namespace structura {

// ---------------------------------------------------------------- QMatrix

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(QMatrix& a) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols && row < a.rows; ++col) {
    int piv = -1;
    for (int i = row; i < a.rows; ++i)
      if (a(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < a.cols; ++j) std::swap(a(piv, j), a(row, j));
    const Rat inv = 1 / a(row, col);
    for (int j = col; j < a.cols; ++j) a(row, j) *= inv;
    for (int i = 0; i < a.rows; ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Rat f = a(i, col);
      for (int j = col; j < a.cols; ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(QMatrix a) { return static_cast<int>(rref(a).size()); }

std::vector<std::vector<Rat>> nullspace(QMatrix a) {
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(a.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < a.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(a.cols, Rat(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rat> solve(const QMatrix& a, const std::vector<Rat>& b, bool* ok) {
  QMatrix aug(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug(i, j) = a(i, j);
    aug(i, a.cols) = b[i];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols) {
    *ok = false;
    return {};
  }
  std::vector<Rat> x(a.cols, Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(static_cast<int>(r), a.cols);
  *ok = true;
  return x;
}

// ---------------------------------------------------------------- PolyMatrix

PolyMatrix::PolyMatrix(int m, int n, std::vector<Poly> entries) : m_(m), n_(n), e_(std::move(entries)) {
  if (static_cast<int>(e_.size()) != m * n) throw Error(ErrorCode::ShapeMismatch, "entry count differs from m·n");
}

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<Poly>>& rows) {
  const int m = static_cast<int>(rows.size());
  const int n = m == 0 ? 0 : static_cast<int>(rows[0].size());
  PolyMatrix out(m, n);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw Error(ErrorCode::ShapeMismatch, "ragged rows");
    for (int j = 0; j < n; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix out(n, n);
  for (int i = 0; i < n; ++i) out(i, i) = Poly(1);
  return out;
}

PolyMatrix PolyMatrix::from_constant(const QMatrix& c) {
  PolyMatrix out(c.rows, c.cols);
  for (int i = 0; i < c.rows; ++i)
    for (int j = 0; j < c.cols; ++j) out(i, j) = Poly(c(i, j));
  return out;
}

int PolyMatrix::degree() const {
  int d = NEG_INF;
  for (const auto& p : e_) d = std::max(d, p.degree());
  return d;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Poly& p) { return p.is_zero(); });
}

int PolyMatrix::column_degree(int j) const {
  int d = NEG_INF;
  for (int i = 0; i < m_; ++i) d = std::max(d, (*this)(i, j).degree());
  return d;
}

std::vector<int> PolyMatrix::column_degrees() const {
  std::vector<int> out(n_);
  for (int j = 0; j < n_; ++j) out[j] = column_degree(j);
  return out;
}

QMatrix PolyMatrix::coefficient(int k) const {
  QMatrix out(m_, n_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < n_; ++j) out(i, j) = (*this)(i, j).coeff(k);
  return out;
}

QMatrix PolyMatrix::leading_column_matrix() const {
  QMatrix out(m_, n_);
  for (int j = 0; j < n_; ++j) {
    const int d = column_degree(j);
    if (d == NEG_INF) continue;
    for (int i = 0; i < m_; ++i) out(i, j) = (*this)(i, j).coeff(d);
  }
  return out;
}

QMatrix PolyMatrix::evaluate(const Rat& x) const {
  QMatrix out(m_, n_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < n_; ++j) out(i, j) = (*this)(i, j)(x);
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(n_, m_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  PolyMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) out(static_cast<int>(i), static_cast<int>(j)) = (*this)(rows[i], cols[j]);
  return out;
}

PolyMatrix PolyMatrix::column_block(int first, int count) const {
  std::vector<int> cols(count), rows(m_);
  for (int j = 0; j < count; ++j) cols[j] = first + j;
  for (int i = 0; i < m_; ++i) rows[i] = i;
  return submatrix(rows, cols);
}

PolyMatrix PolyMatrix::row_block(int first, int count) const {
  std::vector<int> rows(count), cols(n_);
  for (int i = 0; i < count; ++i) rows[i] = first + i;
  for (int j = 0; j < n_; ++j) cols[j] = j;
  return submatrix(rows, cols);
}

PolyMatrix PolyMatrix::select_columns(const std::vector<int>& cols) const {
  std::vector<int> rows(m_);
  for (int i = 0; i < m_; ++i) rows[i] = i;
  return submatrix(rows, cols);
}

void PolyMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < n_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void PolyMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void PolyMatrix::add_row_multiple(int dst, int src, const Poly& f) {
  if (f.is_zero()) return;
  for (int j = 0; j < n_; ++j)
    if (!(*this)(src, j).is_zero()) (*this)(dst, j) += f * (*this)(src, j);
}

void PolyMatrix::add_col_multiple(int dst, int src, const Poly& f) {
  if (f.is_zero()) return;
  for (int i = 0; i < m_; ++i)
    if (!(*this)(i, src).is_zero()) (*this)(i, dst) += f * (*this)(i, src);
}

void PolyMatrix::scale_row(int i, const Rat& c) {
  for (int j = 0; j < n_; ++j) (*this)(i, j) *= c;
}

void PolyMatrix::scale_col(int j, const Rat& c) {
  for (int i = 0; i < m_; ++i) (*this)(i, j) *= c;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "product dimensions");
  PolyMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::ShapeMismatch, "sum dimensions");
  PolyMatrix out = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::ShapeMismatch, "difference dimensions");
  PolyMatrix out = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

PolyMatrix operator*(const Poly& f, const PolyMatrix& a) {
  PolyMatrix out = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = f * a(i, j);
  return out;
}

PolyMatrix hconcat(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "hconcat rows");
  PolyMatrix out(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

PolyMatrix block_diag(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

PolyMatrix diag(const std::vector<Poly>& d) {
  const int n = static_cast<int>(d.size());
  PolyMatrix out(n, n);
  for (int i = 0; i < n; ++i) out(i, i) = d[i];
  return out;
}

// ---------------------------------------------------------------- determinants

namespace {

Poly det_expand(const PolyMatrix& a) {
  const int n = a.rows();
  if (n == 0) return Poly(1);
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  Poly out;
  std::vector<int> rows(n - 1), cols(n - 1);
  for (int i = 0; i < n - 1; ++i) rows[i] = i + 1;
  for (int j = 0; j < n; ++j) {
    if (a(0, j).is_zero()) continue;
    for (int c = 0, k = 0; c < n; ++c)
      if (c != j) cols[k++] = c;
    Poly term = a(0, j) * det_expand(a.submatrix(rows, cols));
    if (j % 2 == 0) out += term;
    else out -= term;
  }
  return out;
}

Poly det_bareiss(PolyMatrix a) {
  const int n = a.rows();
  Poly prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k).is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!a(i, k).is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return Poly();
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a(i, j) = exact_div(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

}  // namespace

Poly det(const PolyMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
  return a.rows() <= 4 ? det_expand(a) : det_bareiss(a);
}

int rank(const PolyMatrix& a) {
  const int cap = std::min(a.rows(), a.cols());
  if (cap == 0 || a.is_zero()) return 0;
  const int points = cap * std::max(a.degree(), 0) + 1;
  int best = 0;
  for (int t = 0; t < points && best < cap; ++t) {
    // 0, 1, -1, 2, -2, ...
    const long x = (t % 2 == 1) ? (t + 1) / 2 : -(t / 2);
    best = std::max(best, rank(a.evaluate(Rat(x))));
  }
  return best;
}

bool is_unimodular(const PolyMatrix& a) {
  if (a.rows() != a.cols()) return false;
  return det(a).degree() == 0;
}

PolyMatrix adjugate(const PolyMatrix& a) {
  const int n = a.rows();
  PolyMatrix out(n, n);
  if (n == 1) {
    out(0, 0) = Poly(1);
    return out;
  }
  std::vector<int> rows(n - 1), cols(n - 1);
  for (int i = 0; i < n; ++i) {
    for (int r = 0, k = 0; r < n; ++r)
      if (r != i) rows[k++] = r;
    for (int j = 0; j < n; ++j) {
      for (int c = 0, k = 0; c < n; ++c)
        if (c != j) cols[k++] = c;
      Poly minor = det(a.submatrix(rows, cols));
      out(j, i) = ((i + j) % 2 == 0) ? minor : -minor;
    }
  }
  return out;
}

PolyMatrix unimodular_inverse(const PolyMatrix& a) {
  const Poly d = det(a);
  if (d.degree() != 0) throw Error(ErrorCode::PreconditionViolated, "matrix is not unimodular");
  PolyMatrix adj = adjugate(a);
  const Rat inv = 1 / d.coeff(0);
  for (int i = 0; i < adj.rows(); ++i) adj.scale_row(i, inv);
  return adj;
}

std::string to_string(const PolyMatrix& a) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < a.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << to_string(a(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace structura
