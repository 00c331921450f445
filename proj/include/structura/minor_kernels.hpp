#pragma once

#include <vector>

#include "structura/poly_matrix.hpp"

namespace structura {

/// Execution policy for exhaustive minor enumeration. `serial` is the
/// reference implementation; `parallel` distributes work with OpenMP when the
/// library is built with it and otherwise falls back to the serial loop.
enum class Exec { serial, parallel };

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k);

/// Every order-k minor of `a`, indexed row-subset major, column-subset minor,
/// both in lexicographic order. Output order does not depend on `exec`.
std::vector<Poly> all_minors(const PolyMatrix& a, int k, Exec exec = Exec::parallel);

/// Monic gcd of all order-k minors (zero if every minor vanishes).
Poly minors_gcd(const PolyMatrix& a, int k, Exec exec = Exec::parallel);

/// Largest degree among the order-k minors (NEG_INF if all vanish).
int minors_max_degree(const PolyMatrix& a, int k, Exec exec = Exec::parallel);

}  // namespace structura
