#pragma once

#include "structura/feasibility.hpp"
#include "structura/structure.hpp"
#include "structura/synthesis.hpp"

namespace structura {

/// Span problem with f = 0: A = K·E·L where E is the shaped triangular middle
/// factor. Accepts P1 (explicit bases) or P2 (index lists) prescriptions.
PolyMatrix realize_span_zero_inf(const Prescription& p, const SynthOptions& opt = {});

/// Span problem with arbitrary f through the Möbius lift. P1 or P2.
PolyMatrix realize_span(const Prescription& p, const SynthOptions& opt = {});

/// Full problem: dual minimal bases for (k, left) and (ℓ, right), then
/// realize_span.
PolyMatrix realize_full(const Prescription& p, const SynthOptions& opt = {});

/// Eigenstructure problem: searches span indices compatible with the null
/// indices, then realize_full.
PolyMatrix realize_eigenstructure(const Prescription& p, const SynthOptions& opt = {});

/// R1/R2/R3: polynomial construction for ψ_1·R, divided by ψ_1.
RationalMatrix realize_rational(const Prescription& p, const SynthOptions& opt = {});

/// Polynomial prescription equivalent to a rational one: α_i = ψ_1 ε_i/ψ_i,
/// d = deg ψ_1 − q_1, f_i = q_i − q_1.
Prescription polynomial_counterpart(const Prescription& p);

/// Möbius point: smallest nonnegative integer a with p(a) ≠ 0 and avoid(a) ≠ 0.
Rat mobius_point(const Poly& p, const Poly& avoid = Poly(1));

struct Realization {
  bool rational = false;
  PolyMatrix poly;
  RationalMatrix rat;
};

/// Dispatch on the variant. Throws Infeasible before any construction when
/// the checker rejects the prescription.
Realization construct(const Prescription& p, const SynthOptions& opt = {});

}  // namespace structura
