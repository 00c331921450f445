#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "structura/poly_matrix.hpp"

namespace structura {

/// Search controls shared by the constructive routines.
struct SynthOptions {
  /// Rotates the order in which roots are distributed; 0 keeps ascending order.
  std::uint64_t seed = 0;
  /// Node budget for the distribution search.
  std::uint64_t max_search = 1000000;
  /// Reads STRUCTURA_MAX_SEARCH when set.
  static SynthOptions from_env();
};

/// ambient×r minimal basis with the given column degrees: s^{d_i} on the
/// diagonal and 1 on the subdiagonal; the identity when ambient = r.
PolyMatrix build_minimal_basis(const std::vector<int>& degrees, int ambient);

struct DualBases {
  PolyMatrix M;
  PolyMatrix N;
};

/// Minimal bases M ((r+q)×r) and N ((r+q)×q) with MᵀN = 0 and the requested
/// column degrees. The degree sums must agree.
DualBases build_dual_minimal_bases(const std::vector<int>& deg_m, const std::vector<int>& deg_n);

/// Sá conditions: α_1⋯α_k divides every product of k distinct δ's for k < r,
/// and ∏δ = ∏α.
bool sa_conditions_hold(const std::vector<Poly>& alpha, const std::vector<Poly>& delta);

/// Monic δ_i of degree h_i satisfying the Sá conditions. α must split over Q.
std::vector<Poly> distribute_invariant_factors(const std::vector<FactoredPoly>& alpha, const std::vector<int>& h,
                                               const SynthOptions& opt = {});

/// Upper triangular matrix with diagonal δ and invariant factors α.
PolyMatrix triangular_realization(const std::vector<Poly>& alpha, const std::vector<Poly>& delta);

/// Column operations col_j −= quot(e_ij, e_ii)·col_i for i = r−1..1, j > i.
PolyMatrix shape_degrees(const PolyMatrix& e, const std::vector<int>& bounds);

/// Diagonal degrees h_i = d − (k_{r−i+1} + ℓ_i).
std::vector<int> diagonal_degrees(int d, const std::vector<int>& k, const std::vector<int>& l);

}  // namespace structura
