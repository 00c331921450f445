#include "structura/realize.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "structura/engine.hpp"
#include "structura/error.hpp"

namespace structura {

namespace {

void require_feasible(const Prescription& p) {
  const FeasibilityReport rep = check_feasibility(p);
  if (rep.feasible) return;
  std::string failed;
  for (const auto& [name, c] : rep.conditions)
    if (c.verdict == Verdict::fail) failed += (failed.empty() ? "" : ", ") + name;
  throw Error(ErrorCode::Infeasible, "prescription fails " + failed);
}

FactoredPoly require_split(const Poly& a) {
  FactoredPoly fp = split_over_rationals(a);
  if (!fp.is_split())
    throw Error(ErrorCode::FieldNotSplit, "invariant factor " + to_string(a) + " has no splitting over Q");
  return fp;
}

std::vector<int> column_order(const PolyMatrix& b, bool ascending) {
  const auto degs = b.column_degrees();
  std::vector<int> order(b.cols());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return ascending ? degs[x] < degs[y] : degs[x] > degs[y]; });
  return order;
}

// Bases from the prescription: the supplied ones (P1) or bidiagonal builders (P2).
std::pair<PolyMatrix, PolyMatrix> span_bases(const Prescription& p) {
  if (p.K && p.Lt) return {*p.K, *p.Lt};
  return {build_minimal_basis(p.k, p.m), build_minimal_basis(p.l, p.n)};
}

// Core of the f = 0 construction with already factored invariant factors.
PolyMatrix zero_inf_core(int d, const std::vector<FactoredPoly>& alpha, const PolyMatrix& k, const PolyMatrix& lt,
                         const SynthOptions& opt) {
  // K columns ascending in degree pair with Lᵀ columns descending, so the
  // (i,i) slot of diag(s^k)·E·diag(s^ℓ) reaches degree d exactly.
  const PolyMatrix k_sorted = k.select_columns(column_order(k, true));
  const PolyMatrix lt_sorted = lt.select_columns(column_order(lt, false));
  const auto kd = k_sorted.column_degrees();
  const auto ld = lt_sorted.column_degrees();
  const int r = static_cast<int>(alpha.size());
  std::vector<int> h(r);
  for (int i = 0; i < r; ++i) h[i] = d - (kd[i] + ld[i]);
  const std::vector<Poly> delta = distribute_invariant_factors(alpha, h, opt);
  std::vector<Poly> expanded;
  for (const auto& a : alpha) expanded.push_back(a.expand());
  const PolyMatrix e = shape_degrees(triangular_realization(expanded, delta), h);
  return k_sorted * e * lt_sorted.transpose();
}

std::vector<FactoredPoly> factor_all(const std::vector<Poly>& alpha) {
  std::vector<FactoredPoly> out;
  for (const auto& a : alpha) out.push_back(require_split(a));
  return out;
}

// β_i = α̃_i s^{f_i} / α_i(a) in factored form: roots λ of α_i move to
// 1/(λ − a) and f_i zeros are added at the origin.
FactoredPoly lifted_factor(const FactoredPoly& a, const Rat& shift, int f) {
  FactoredPoly out;
  out.leading = Rat(1);
  for (const auto& [root, m] : a.linear_factors) out.linear_factors.emplace_back(Rat(1) / (root - shift), m);
  if (f > 0) out.linear_factors.emplace_back(Rat(0), f);
  std::sort(out.linear_factors.begin(), out.linear_factors.end());
  return out;
}

bool all_zero(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

PolyMatrix span_core(const Prescription& p, const PolyMatrix& k, const PolyMatrix& lt, const SynthOptions& opt) {
  const std::vector<FactoredPoly> alpha = factor_all(p.alpha);
  if (all_zero(p.f)) return zero_inf_core(p.d, alpha, k, lt, opt);
  const Rat a = mobius_point(p.alpha.back(), p.avoid);
  std::vector<FactoredPoly> beta;
  for (int i = 0; i < p.r; ++i) {
    beta.push_back(lifted_factor(alpha[i], a, p.f[i]));
    auto [tilde, value] = mobius_tilde(p.alpha[i], a);
    const Poly expect = tilde * Poly::monomial(Rat(1) / value, p.f[i]);
    if (beta.back().expand() != expect) throw Error(ErrorCode::Internal, "lifted invariant factor mismatch");
  }
  const PolyMatrix k_bar = scale_basis_mobius(k, a, k.column_degrees());
  const PolyMatrix lt_bar = scale_basis_mobius(lt, a, lt.column_degrees());
  const PolyMatrix b = zero_inf_core(p.d, beta, k_bar, lt_bar, opt);
  return mobius_frame(b, a, p.d);
}

void require_variant(const Prescription& p, std::initializer_list<Variant> allowed) {
  if (std::find(allowed.begin(), allowed.end(), p.variant) == allowed.end())
    throw Error(ErrorCode::PreconditionViolated, std::string("variant ") + variant_name(p.variant) + " not handled here");
}

// Descending partitions of `total` into `parts` nonnegative parts, largest
// first in lexicographic order.
void for_each_partition(int total, int parts, const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> cur;
  std::function<bool(int, int)> rec = [&](int left, int cap) {
    if (static_cast<int>(cur.size()) == parts) return left == 0 ? visit(cur) : false;
    const int slots = parts - static_cast<int>(cur.size());
    for (int v = std::min(left, cap); v >= 0; --v) {
      if (static_cast<long>(v) * slots < left) break;
      cur.push_back(v);
      if (rec(left - v, v)) return true;
      cur.pop_back();
    }
    return false;
  };
  rec(total, total);
}

}  // namespace

Rat mobius_point(const Poly& p, const Poly& avoid) {
  for (int a = 0;; ++a)
    if (p(Rat(a)) != 0 && avoid(Rat(a)) != 0) return Rat(a);
}

PolyMatrix realize_span_zero_inf(const Prescription& p, const SynthOptions& opt) {
  require_variant(p, {Variant::P1_spans, Variant::P2_span_indices});
  require_feasible(p);
  if (!all_zero(p.f)) throw Error(ErrorCode::PreconditionViolated, "f must vanish");
  auto [k, lt] = span_bases(p);
  return zero_inf_core(p.d, factor_all(p.alpha), k, lt, opt);
}

PolyMatrix realize_span(const Prescription& p, const SynthOptions& opt) {
  require_variant(p, {Variant::P1_spans, Variant::P2_span_indices});
  require_feasible(p);
  auto [k, lt] = span_bases(p);
  return span_core(p, k, lt, opt);
}

PolyMatrix realize_full(const Prescription& p, const SynthOptions& opt) {
  require_variant(p, {Variant::P3_full});
  require_feasible(p);
  const DualBases col = build_dual_minimal_bases(p.k, p.left);
  const DualBases row = build_dual_minimal_bases(p.l, p.right);
  return span_core(p, col.M, row.M, opt);
}

PolyMatrix realize_eigenstructure(const Prescription& p, const SynthOptions& opt) {
  require_variant(p, {Variant::EIG_eigenstructure});
  require_feasible(p);
  Prescription full = p;
  full.variant = Variant::P3_full;
  const int sum_left = std::accumulate(p.left.begin(), p.left.end(), 0);
  const int sum_right = std::accumulate(p.right.begin(), p.right.end(), 0);
  std::uint64_t nodes = 0;
  bool found = false;
  for_each_partition(sum_left, p.r, [&](const std::vector<int>& k) {
    for_each_partition(sum_right, p.r, [&](const std::vector<int>& l) {
      if (++nodes > opt.max_search) throw Error(ErrorCode::SearchExhausted, "span index search exceeded its budget");
      full.k = k;
      full.l = l;
      found = check_feasibility(full).feasible;
      return found;
    });
    return found;
  });
  if (!found) throw Error(ErrorCode::SearchExhausted, "no compatible span indices found");
  return realize_full(full, opt);
}

Prescription polynomial_counterpart(const Prescription& p) {
  if (!is_rational(p.variant)) return p;
  validate_prescription(p);
  Prescription out = p;
  switch (p.variant) {
    case Variant::R1_spans: out.variant = Variant::P1_spans; break;
    case Variant::R2_span_indices: out.variant = Variant::P2_span_indices; break;
    default: out.variant = Variant::P3_full; break;
  }
  const Poly& psi1 = p.psi.front();
  out.alpha.clear();
  out.f.clear();
  for (int i = 0; i < p.r; ++i) {
    out.alpha.push_back(exact_div(psi1 * p.eps[i], p.psi[i]));
    out.f.push_back(p.q[i] - p.q.front());
  }
  out.d = psi1.degree() - p.q.front();
  out.avoid = psi1;
  out.eps.clear();
  out.psi.clear();
  out.q.clear();
  return out;
}

RationalMatrix realize_rational(const Prescription& p, const SynthOptions& opt) {
  require_variant(p, {Variant::R1_spans, Variant::R2_span_indices, Variant::R3_full});
  require_feasible(p);
  const Prescription poly = polynomial_counterpart(p);
  const PolyMatrix a = poly.variant == Variant::P3_full ? realize_full(poly, opt) : realize_span(poly, opt);
  const Poly& psi1 = p.psi.front();
  RationalMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = RatFn(a(i, j), psi1);
  return out;
}

Realization construct(const Prescription& p, const SynthOptions& opt) {
  Realization out;
  switch (p.variant) {
    case Variant::P1_spans:
    case Variant::P2_span_indices: out.poly = realize_span(p, opt); break;
    case Variant::P3_full: out.poly = realize_full(p, opt); break;
    case Variant::EIG_eigenstructure: out.poly = realize_eigenstructure(p, opt); break;
    default:
      out.rational = true;
      out.rat = realize_rational(p, opt);
      break;
  }
  return out;
}

}  // namespace structura
