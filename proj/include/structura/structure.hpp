#pragma once

#include <string>
#include <vector>

#include "structura/engine.hpp"
#include "structura/poly_matrix.hpp"

namespace structura {

/// Complete structural data of a polynomial matrix. Index lists are sorted
/// descending, f and q ascending.
struct PolyStructuralData {
  int m = 0, n = 0, r = 0;
  int d = NEG_INF;
  std::vector<Poly> alpha;
  std::vector<int> f;
  std::vector<int> q;
  std::vector<int> k;      // column-space minimal indices
  std::vector<int> l;      // row-space minimal indices
  std::vector<int> right;  // right null-space minimal indices d_i
  std::vector<int> left;   // left null-space minimal indices v_i
  PolyMatrix colspan_basis;     // K, m×r
  PolyMatrix rowspan_basis;     // Lᵀ, n×r
  PolyMatrix right_null_basis;  // n×(n−r)
  PolyMatrix left_null_basis;   // m×(m−r)
};

enum class Subspace { colspan, rowspan, rightnull, leftnull };

struct SubspaceBasis {
  PolyMatrix basis;
  std::vector<int> indices;
};

/// Valuations at λ of the invariant factors, ascending.
std::vector<int> partial_multiplicities(const PolyMatrix& p, const Rat& lambda);

struct InfStructure {
  int d = NEG_INF;
  std::vector<int> f;
  std::vector<int> q;
};

/// Degree, partial multiplicities at infinity and orders at infinity.
InfStructure inf_structure(const PolyMatrix& p);

/// Minimal basis of one of the four fundamental subspaces, normalised.
SubspaceBasis subspace_minimal_basis(const PolyMatrix& p, Subspace which);
SubspaceBasis subspace_minimal_basis(const SmithDecomposition& smith, const PolyMatrix& p, Subspace which);

/// Column-reduce a full-column-rank basis, scale each column so the first
/// nonzero entry of its leading vector is 1, and sort columns by degree
/// (descending) then coefficients.
PolyMatrix normalize_basis(const PolyMatrix& basis);

/// Full pipeline; throws Error(Internal) if an index identity fails.
PolyStructuralData extract_poly_structure(const PolyMatrix& p);

/// Dense matrix of reduced rational functions.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int m, int n) : m_(m), n_(n), e_(static_cast<size_t>(m) * n) {}
  static RationalMatrix from_poly(const PolyMatrix& p);

  int rows() const { return m_; }
  int cols() const { return n_; }
  RatFn& operator()(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const RatFn& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
  bool is_zero() const;
  bool is_polynomial() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.e_ == b.e_;
  }

 private:
  int m_ = 0, n_ = 0;
  std::vector<RatFn> e_;
};

/// Smith–McMillan data: ε_1 | … | ε_r, ψ_r | … | ψ_1, q ascending.
struct RatStructuralData {
  int m = 0, n = 0, r = 0;
  Poly psi1;
  std::vector<Poly> eps;
  std::vector<Poly> psi;
  std::vector<int> q;
  std::vector<int> k, l, right, left;
  PolyMatrix colspan_basis, rowspan_basis, right_null_basis, left_null_basis;
  PolyStructuralData cleared;  // data of ψ_1·R
};

struct ClearedMatrix {
  Poly psi1;
  PolyMatrix p;
};

/// ψ_1 = monic lcm of the denominators and P = ψ_1·R.
ClearedMatrix clear_denominators(const RationalMatrix& r);

/// Maps the data of p·R (p any nonzero polynomial with p·R polynomial) back
/// to the data of R.
RatStructuralData rational_data_from_multiple(const PolyStructuralData& pr, const Poly& p);

RatStructuralData extract_rational_structure(const RationalMatrix& r);

/// Exact change of basis: X with n1·X = n2, or an empty matrix if none is
/// polynomial. n1 must have full column rank.
PolyMatrix change_of_basis(const PolyMatrix& n1, const PolyMatrix& n2);
/// Same column span with a unimodular change of basis.
bool same_span_unimodular(const PolyMatrix& computed, const PolyMatrix& supplied);

}  // namespace structura
