#pragma once

#include <vector>

#include "structura/minor_kernels.hpp"
#include "structura/poly_matrix.hpp"

namespace structura {

/// Strictly increasing 1-based indices.
using IndexTuple = std::vector<int>;

/// Z* = [r − z_k + 1, …, r − z_1 + 1].
IndexTuple star(const IndexTuple& z, int r);
/// Strictly increasing with entries in [1, r].
bool is_index_tuple(const IndexTuple& z, int r);
/// Componentwise a ≤ b (same length).
bool leq(const IndexTuple& a, const IndexTuple& b);

struct MinorSelection {
  IndexTuple I;
  IndexTuple J;
  Poly minor;
};

/// I, J with J ≤ Z, I ≤ Z* and det E(I, J) ≠ 0, by induction on r: drop the
/// last row and the first column of the top block that depends on the
/// preceding ones, then lift the answer for the smaller matrix.
MinorSelection select_nonzero_minor(const PolyMatrix& e, const IndexTuple& z);

/// Every admissible pair (I ≤ Z*, J ≤ Z, nonzero minor), lexicographic in
/// (I, J). Output order does not depend on `exec`.
std::vector<MinorSelection> admissible_pairs(const PolyMatrix& e, const IndexTuple& z, Exec exec = Exec::parallel);

}  // namespace structura
