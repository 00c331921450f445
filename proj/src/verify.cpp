#include "structura/verify.hpp"

#include "structura/error.hpp"

namespace structura {

namespace {

void check_shape(int rows, int cols, const Prescription& p) {
  if (rows != p.m || cols != p.n)
    throw Error(ErrorCode::ShapeMismatch, "matrix is " + std::to_string(rows) + "x" + std::to_string(cols) +
                                              ", prescription expects " + std::to_string(p.m) + "x" +
                                              std::to_string(p.n));
}

struct Extracted {
  int r;
  std::vector<int> k, l, right, left;
  const PolyMatrix* colspan;
  const PolyMatrix* rowspan;
};

// Span and null-space fields shared by the polynomial and rational checks.
void compare_subspaces(const Extracted& x, const Prescription& p, std::vector<std::string>& out) {
  const Variant v = p.variant;
  if (v == Variant::P1_spans || v == Variant::R1_spans) {
    if (!p.K || !same_span_unimodular(*x.colspan, *p.K)) out.push_back("colspan");
    if (!p.Lt || !same_span_unimodular(*x.rowspan, *p.Lt)) out.push_back("rowspan");
  } else if (v != Variant::EIG_eigenstructure) {
    if (x.k != p.k) out.push_back("colspan_indices");
    if (x.l != p.l) out.push_back("rowspan_indices");
  }
  if (v == Variant::P3_full || v == Variant::R3_full || v == Variant::EIG_eigenstructure) {
    if (x.right != p.right) out.push_back("right_null_indices");
    if (x.left != p.left) out.push_back("left_null_indices");
  }
}

VerifyReport finish(std::vector<std::string> mismatches) {
  VerifyReport rep;
  rep.mismatches = std::move(mismatches);
  rep.pass = rep.mismatches.empty();
  return rep;
}

}  // namespace

VerifyReport verify(const PolyMatrix& a, const Prescription& p) {
  check_shape(a.rows(), a.cols(), p);
  if (is_rational(p.variant)) return verify(RationalMatrix::from_poly(a), p);
  if (a.is_zero()) return finish({"rank"});
  const PolyStructuralData s = extract_poly_structure(a);
  std::vector<std::string> out;
  if (s.r != p.r) return finish({"rank"});
  if (s.d != p.d) out.push_back("degree");
  if (s.alpha != p.alpha) out.push_back("invariant_factors");
  if (s.f != p.f) out.push_back("inf_partial_mults");
  compare_subspaces({s.r, s.k, s.l, s.right, s.left, &s.colspan_basis, &s.rowspan_basis}, p, out);
  return finish(std::move(out));
}

VerifyReport verify(const RationalMatrix& a, const Prescription& p) {
  check_shape(a.rows(), a.cols(), p);
  if (!is_rational(p.variant)) {
    if (!a.is_polynomial()) return finish({"polynomial"});
    PolyMatrix poly(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) poly(i, j) = a(i, j).num();
    return verify(poly, p);
  }
  if (a.is_zero()) return finish({"rank"});
  const RatStructuralData s = extract_rational_structure(a);
  std::vector<std::string> out;
  if (s.r != p.r) return finish({"rank"});
  if (s.eps != p.eps || s.psi != p.psi) out.push_back("invariant_rational_functions");
  if (s.q != p.q) out.push_back("inf_orders");
  compare_subspaces({s.r, s.k, s.l, s.right, s.left, &s.colspan_basis, &s.rowspan_basis}, p, out);
  return finish(std::move(out));
}

}  // namespace structura
