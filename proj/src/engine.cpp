#include <algorithm>

#include "structura/engine.hpp"
#include "structura/error.hpp"

namespace structura {

bool is_column_proper(const PolyMatrix& p) {
  for (int d : p.column_degrees())
    if (d == NEG_INF) return false;
  return rank(p.leading_column_matrix()) == p.cols();
}

ColumnReduction column_reduce(const PolyMatrix& p) {
  if (rank(p) != p.cols()) throw Error(ErrorCode::RankDeficient, "column_reduce needs full column rank");
  const int n = p.cols();
  ColumnReduction out{p, PolyMatrix::identity(n), {}};
  while (true) {
    const auto degs = out.reduced.column_degrees();
    const QMatrix ph = out.reduced.leading_column_matrix();
    if (rank(ph) == n) {
      out.column_degrees = degs;
      return out;
    }
    bool progressed = false;
    // Rightmost column whose leading vector lies in the span of the leading
    // vectors of the other columns of no larger degree.
    for (int j0 = n - 1; j0 >= 0 && !progressed; --j0) {
      std::vector<int> support;
      for (int j = 0; j < n; ++j)
        if (j != j0 && degs[j] <= degs[j0]) support.push_back(j);
      QMatrix sub(ph.rows, static_cast<int>(support.size()));
      std::vector<Rat> target(ph.rows);
      for (int i = 0; i < ph.rows; ++i) {
        for (size_t c = 0; c < support.size(); ++c) sub(i, static_cast<int>(c)) = ph(i, support[c]);
        target[i] = ph(i, j0);
      }
      bool ok = false;
      const auto x = solve(sub, target, &ok);
      if (!ok) continue;
      for (size_t c = 0; c < support.size(); ++c) {
        if (x[c] == 0) continue;
        const Poly f = Poly::monomial(-x[c], degs[j0] - degs[support[c]]);
        out.reduced.add_col_multiple(j0, support[c], f);
        out.right_transform.add_col_multiple(j0, support[c], f);
      }
      progressed = true;
    }
    if (!progressed) throw Error(ErrorCode::Internal, "column reduction made no progress");
  }
}

MinimalBasisTest is_minimal_basis(const PolyMatrix& k) {
  MinimalBasisTest out;
  out.column_degrees = k.column_degrees();
  if (k.cols() == 0) {
    out.flag = true;
    return out;
  }
  if (k.rows() < k.cols()) return out;
  const auto inv = invariant_factors(k);
  if (static_cast<int>(inv.size()) != k.cols()) return out;
  for (const auto& a : inv)
    if (a != Poly(1)) return out;
  out.flag = is_column_proper(k);
  return out;
}

PolyMatrix reversal(const PolyMatrix& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroMatrix, "reversal of the zero matrix");
  const int d = p.degree();
  PolyMatrix out(p.rows(), p.cols());
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) out(i, j) = reverse(p(i, j), d);
  return out;
}

PolyMatrix mobius_frame(const PolyMatrix& p, const Rat& a, int d) {
  if (d < p.degree()) throw Error(ErrorCode::DegreeTooSmall, "frame degree below matrix degree");
  std::vector<Poly> powers(static_cast<size_t>(std::max(d, 0)) + 1);
  powers[0] = Poly(1);
  for (int k = 1; k <= d; ++k) powers[k] = powers[k - 1] * Poly::linear(a);
  PolyMatrix out(p.rows(), p.cols());
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) {
      const Poly& e = p(i, j);
      Poly acc;
      for (int k = 0; k <= e.degree(); ++k)
        if (e.coeff(k) != 0) acc += powers[d - k] * e.coeff(k);
      out(i, j) = acc;
    }
  return out;
}

namespace {

// s^n e(1/s + a) = Σ c_k (1 + a s)^k s^{n-k}
Poly shifted_reverse(const Poly& e, const Rat& a, int n) {
  const Poly one_as(std::vector<Rat>{Rat(1), a});
  Poly acc, power(1);
  for (int k = 0; k <= e.degree(); ++k) {
    if (e.coeff(k) != 0) acc += power * Poly::monomial(e.coeff(k), n - k);
    power = power * one_as;
  }
  return acc;
}

}  // namespace

PolyMatrix inverse_mobius_frame(const PolyMatrix& a, const Rat& shift, int d) {
  if (d < a.degree()) throw Error(ErrorCode::DegreeTooSmall, "frame degree below matrix degree");
  PolyMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = shifted_reverse(a(i, j), shift, d);
  return out;
}

PolyMatrix scale_basis_mobius(const PolyMatrix& k, const Rat& a, const std::vector<int>& degs) {
  if (static_cast<int>(degs.size()) != k.cols() || degs != k.column_degrees())
    throw Error(ErrorCode::DegreeMismatch, "degrees differ from the column degrees");
  PolyMatrix out(k.rows(), k.cols());
  for (int j = 0; j < k.cols(); ++j)
    for (int i = 0; i < k.rows(); ++i) out(i, j) = shifted_reverse(k(i, j), a, degs[j]);
  return out;
}

}  // namespace structura
