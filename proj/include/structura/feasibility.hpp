#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "structura/poly_matrix.hpp"

namespace structura {

enum class Variant {
  P1_spans,
  P2_span_indices,
  P3_full,
  R1_spans,
  R2_span_indices,
  R3_full,
  /// Existence with prescribed finite and infinite elementary data plus
  /// left/right minimal indices, without column/row-span data.
  EIG_eigenstructure,
};

const char* variant_name(Variant v);
Variant parse_variant(const std::string& name);
bool is_rational(Variant v);

/// Prescribed structural data. Polynomial variants use d, alpha and f;
/// rational ones use eps, psi and q. Partitions are stored descending, f and
/// q ascending.
struct Prescription {
  Variant variant = Variant::P2_span_indices;
  int m = 0, n = 0, r = 0;
  int d = 0;
  std::vector<Poly> alpha;
  std::vector<int> f;
  std::vector<Poly> eps;
  std::vector<Poly> psi;
  std::vector<int> q;
  std::vector<int> k;
  std::vector<int> l;
  std::vector<int> right;
  std::vector<int> left;
  std::optional<PolyMatrix> K;
  std::optional<PolyMatrix> Lt;
  /// Extra polynomial whose roots the Möbius point must avoid (ψ_1 when the
  /// prescription was derived from a rational one). Not serialized.
  Poly avoid{1};
};

enum class Verdict { pass, fail, not_applicable };
const char* verdict_name(Verdict v);

struct ConditionResult {
  Verdict verdict = Verdict::not_applicable;
  /// Majorization conditions: the two sequences and their partial sums.
  std::vector<int> lhs, rhs;
  std::vector<int> lhs_partial, rhs_partial;
  std::string detail;
};

struct FeasibilityReport {
  bool feasible = false;
  std::vector<int> g_sequence;
  /// Keys: eqf1, eqprec, eqx0, eqy0, eqsums, eqIST, eqprec_rat.
  std::map<std::string, ConditionResult> conditions;
};

/// Descending reordering of {k_{r−i+1} + ℓ_i}.
std::vector<int> g_sequence(const std::vector<int>& k, const std::vector<int>& l);
/// a ≺ b: prefix sums of a bounded by those of b, equal totals.
bool majorizes(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> partial_sums(const std::vector<int>& v);

/// Throws Error(MalformedPrescription) on chain, sort or shape violations.
void validate_prescription(const Prescription& p);
/// Span indices after reading P1/R1 bases (sorted descending).
std::vector<int> effective_k(const Prescription& p);
std::vector<int> effective_l(const Prescription& p);

FeasibilityReport check_feasibility(const Prescription& p);

}  // namespace structura
