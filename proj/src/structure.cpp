#include "structura/structure.hpp"

#include <algorithm>
#include <numeric>

#include "structura/error.hpp"

namespace structura {

std::vector<int> partial_multiplicities(const PolyMatrix& p, const Rat& lambda) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroMatrix, "partial multiplicities of the zero matrix");
  std::vector<int> out;
  for (const auto& a : invariant_factors(p)) out.push_back(root_multiplicity(a, lambda));
  return out;
}

InfStructure inf_structure(const PolyMatrix& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroMatrix, "infinite structure of the zero matrix");
  InfStructure out;
  out.d = p.degree();
  out.f = partial_multiplicities(reversal(p), Rat(0));
  for (int fi : out.f) out.q.push_back(fi - out.d);
  return out;
}

namespace {

bool column_less(const PolyMatrix& b, int x, int y, const std::vector<int>& degs) {
  if (degs[x] != degs[y]) return degs[x] > degs[y];
  for (int i = 0; i < b.rows(); ++i) {
    const auto& cx = b(i, x).coeffs();
    const auto& cy = b(i, y).coeffs();
    if (cx == cy) continue;
    // Larger first, so columns with an earlier nonzero entry lead.
    return std::lexicographical_compare(cy.begin(), cy.end(), cx.begin(), cx.end());
  }
  return x < y;
}

}  // namespace

PolyMatrix normalize_basis(const PolyMatrix& basis) {
  if (basis.cols() == 0) return basis;
  PolyMatrix red = column_reduce(basis).reduced;
  const auto degs = red.column_degrees();
  const QMatrix ph = red.leading_column_matrix();
  for (int j = 0; j < red.cols(); ++j) {
    for (int i = 0; i < ph.rows; ++i)
      if (ph(i, j) != 0) {
        red.scale_col(j, 1 / ph(i, j));
        break;
      }
  }
  std::vector<int> order(red.cols());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return column_less(red, x, y, degs); });
  return red.select_columns(order);
}

SubspaceBasis subspace_minimal_basis(const SmithDecomposition& sm, const PolyMatrix& p, Subspace which) {
  const int m = p.rows(), n = p.cols(), r = sm.rank;
  PolyMatrix raw;
  switch (which) {
    case Subspace::colspan: raw = sm.left_inv.column_block(0, r); break;
    case Subspace::rowspan: raw = sm.right_inv.row_block(0, r).transpose(); break;
    case Subspace::rightnull: raw = sm.right.column_block(r, n - r); break;
    case Subspace::leftnull: raw = sm.left.row_block(r, m - r).transpose(); break;
  }
  SubspaceBasis out;
  out.basis = normalize_basis(raw);
  out.indices = out.basis.column_degrees();
  std::sort(out.indices.rbegin(), out.indices.rend());
  return out;
}

SubspaceBasis subspace_minimal_basis(const PolyMatrix& p, Subspace which) {
  return subspace_minimal_basis(smith_form(p), p, which);
}

namespace {

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

PolyStructuralData extract_poly_structure(const PolyMatrix& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroMatrix, "structure of the zero matrix");
  const SmithDecomposition sm = smith_form(p);
  PolyStructuralData out;
  out.m = p.rows();
  out.n = p.cols();
  out.r = sm.rank;
  out.alpha = sm.diag;
  const InfStructure inf = inf_structure(p);
  out.d = inf.d;
  out.f = inf.f;
  out.q = inf.q;
  auto col = subspace_minimal_basis(sm, p, Subspace::colspan);
  auto row = subspace_minimal_basis(sm, p, Subspace::rowspan);
  auto rn = subspace_minimal_basis(sm, p, Subspace::rightnull);
  auto ln = subspace_minimal_basis(sm, p, Subspace::leftnull);
  out.colspan_basis = std::move(col.basis);
  out.k = std::move(col.indices);
  out.rowspan_basis = std::move(row.basis);
  out.l = std::move(row.indices);
  out.right_null_basis = std::move(rn.basis);
  out.right = std::move(rn.indices);
  out.left_null_basis = std::move(ln.basis);
  out.left = std::move(ln.indices);

  int sum_alpha = 0;
  for (const auto& a : out.alpha) sum_alpha += a.degree();
  const int rd = out.r * out.d;
  if (out.f.empty() || out.f.front() != 0) throw Error(ErrorCode::Internal, "f_1 != 0");
  if (sum(out.left) != sum(out.k) || sum(out.right) != sum(out.l))
    throw Error(ErrorCode::Internal, "dual sum identity violated");
  if (sum(out.k) + sum(out.l) + sum(out.f) + sum_alpha != rd)
    throw Error(ErrorCode::Internal, "span index sum identity violated");
  if (sum(out.right) + sum(out.left) + sum(out.f) + sum_alpha != rd)
    throw Error(ErrorCode::Internal, "index sum theorem violated");
  return out;
}

// ---------------------------------------------------------------- rational layer

RationalMatrix RationalMatrix::from_poly(const PolyMatrix& p) {
  RationalMatrix out(p.rows(), p.cols());
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) out(i, j) = RatFn(p(i, j));
  return out;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const RatFn& x) { return x.is_zero(); });
}

bool RationalMatrix::is_polynomial() const {
  return std::all_of(e_.begin(), e_.end(), [](const RatFn& x) { return x.is_polynomial(); });
}

ClearedMatrix clear_denominators(const RationalMatrix& r) {
  if (r.is_zero()) throw Error(ErrorCode::ZeroMatrix, "clearing denominators of the zero matrix");
  Poly l(1);
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) l = poly_lcm(l, r(i, j).den());
  ClearedMatrix out{l, PolyMatrix(r.rows(), r.cols())};
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) out.p(i, j) = r(i, j).num() * exact_div(l, r(i, j).den());
  return out;
}

RatStructuralData rational_data_from_multiple(const PolyStructuralData& pr, const Poly& p) {
  RatStructuralData out;
  out.m = pr.m;
  out.n = pr.n;
  out.r = pr.r;
  out.psi1 = monic(p);
  for (int i = 0; i < pr.r; ++i) {
    const RatFn ratio(pr.alpha[i], out.psi1);
    out.eps.push_back(ratio.num());
    out.psi.push_back(ratio.den());
    out.q.push_back(pr.f[i] - pr.d + out.psi1.degree());
  }
  out.k = pr.k;
  out.l = pr.l;
  out.right = pr.right;
  out.left = pr.left;
  out.colspan_basis = pr.colspan_basis;
  out.rowspan_basis = pr.rowspan_basis;
  out.right_null_basis = pr.right_null_basis;
  out.left_null_basis = pr.left_null_basis;
  out.cleared = pr;
  return out;
}

RatStructuralData extract_rational_structure(const RationalMatrix& r) {
  const ClearedMatrix c = clear_denominators(r);
  RatStructuralData out = rational_data_from_multiple(extract_poly_structure(c.p), c.psi1);
  int total = sum(out.k) + sum(out.l) + sum(out.q);
  for (int i = 0; i < out.r; ++i) total += out.eps[i].degree() - out.psi[i].degree();
  if (total != 0) throw Error(ErrorCode::Internal, "rational index sum identity violated");
  return out;
}

// ---------------------------------------------------------------- span comparison

PolyMatrix change_of_basis(const PolyMatrix& n1, const PolyMatrix& n2) {
  if (n1.rows() != n2.rows()) throw Error(ErrorCode::ShapeMismatch, "bases live in different spaces");
  const int r = n1.cols();
  if (r == 0) return PolyMatrix(0, n2.cols());
  std::vector<int> all_cols(r);
  std::iota(all_cols.begin(), all_cols.end(), 0);
  std::vector<int> chosen;
  Poly dt;
  for (const auto& rows : combinations(n1.rows(), r)) {
    dt = det(n1.submatrix(rows, all_cols));
    if (!dt.is_zero()) {
      chosen = rows;
      break;
    }
  }
  if (chosen.empty()) throw Error(ErrorCode::RankDeficient, "basis without full column rank");
  std::vector<int> cols2(n2.cols());
  std::iota(cols2.begin(), cols2.end(), 0);
  PolyMatrix x = adjugate(n1.submatrix(chosen, all_cols)) * n2.submatrix(chosen, cols2);
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) {
      auto [q, rem] = poly_divmod(x(i, j), dt);
      if (!rem.is_zero()) return {};
      x(i, j) = q;
    }
  if (n1 * x != n2) return {};
  return x;
}

bool same_span_unimodular(const PolyMatrix& computed, const PolyMatrix& supplied) {
  if (computed.rows() != supplied.rows() || computed.cols() != supplied.cols()) return false;
  if (computed.cols() == 0) return true;
  const PolyMatrix x = change_of_basis(computed, supplied);
  if (x.rows() != computed.cols()) return false;
  return is_unimodular(x);
}

}  // namespace structura
