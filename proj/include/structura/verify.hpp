#pragma once

#include <string>
#include <vector>

#include "structura/feasibility.hpp"
#include "structura/structure.hpp"

namespace structura {

/// Outcome of re-extracting a matrix and comparing it with a prescription.
/// Mismatch names: rank, degree, invariant_factors, inf_partial_mults,
/// invariant_rational_functions, inf_orders, colspan, rowspan,
/// colspan_indices, rowspan_indices, right_null_indices, left_null_indices.
struct VerifyReport {
  bool pass = false;
  std::vector<std::string> mismatches;
};

/// Throws ShapeMismatch when the matrix size differs from (m, n).
VerifyReport verify(const PolyMatrix& a, const Prescription& p);
VerifyReport verify(const RationalMatrix& a, const Prescription& p);

}  // namespace structura
