#pragma once

#include <vector>

#include "structura/minor_kernels.hpp"
#include "structura/poly_matrix.hpp"

namespace structura {

/// left · P · right = [diag(α_1, …, α_r) 0; 0 0] with α_1 | … | α_r monic.
/// The inverses of both transformers are kept because the subspace bases are
/// read from them.
struct SmithDecomposition {
  PolyMatrix left;
  PolyMatrix left_inv;
  PolyMatrix right;
  PolyMatrix right_inv;
  std::vector<Poly> diag;
  int rank = 0;
};

/// Smith form with transformers. Pivot: nonzero entry of least degree in the
/// trailing block, ties to the smallest (row, col).
SmithDecomposition smith_form(const PolyMatrix& p);
/// Invariant factors only (same pivoting, no transformer bookkeeping).
std::vector<Poly> invariant_factors(const PolyMatrix& p);

/// α_1⋯α_k as the monic gcd of all order-k minors; 1 ≤ k ≤ rank(P).
Poly gcd_minors_oracle(const PolyMatrix& p, int k, Exec exec = Exec::parallel);
/// Largest degree of an order-k minor; 1 ≤ k ≤ rank(P).
int max_minor_degree(const PolyMatrix& p, int k, Exec exec = Exec::parallel);

/// reduced = input · right_transform with a full-column-rank P_h.
struct ColumnReduction {
  PolyMatrix reduced;
  PolyMatrix right_transform;
  std::vector<int> column_degrees;
};

ColumnReduction column_reduce(const PolyMatrix& p);
bool is_column_proper(const PolyMatrix& p);

struct MinimalBasisTest {
  bool flag = false;
  std::vector<int> column_degrees;
};

/// Full column rank at every point (Smith form all ones) and column proper.
MinimalBasisTest is_minimal_basis(const PolyMatrix& k);

/// t^d P(1/t), d = deg P.
PolyMatrix reversal(const PolyMatrix& p);
/// Σ P_j (s − a)^{d − j}; requires d ≥ deg P.
PolyMatrix mobius_frame(const PolyMatrix& p, const Rat& a, int d);
/// s^d A(1/s + a); undoes mobius_frame when d is the exact degree both ways.
PolyMatrix inverse_mobius_frame(const PolyMatrix& a, const Rat& shift, int d);
/// K(1/s + a) · diag(s^{degs_j}); degs must equal the column degrees of K.
PolyMatrix scale_basis_mobius(const PolyMatrix& k, const Rat& a, const std::vector<int>& degs);

}  // namespace structura
