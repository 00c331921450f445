#include "structura/feasibility.hpp"

#include <algorithm>
#include <numeric>

#include "structura/engine.hpp"
#include "structura/error.hpp"

namespace structura {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::P1_spans: return "P1_spans";
    case Variant::P2_span_indices: return "P2_span_indices";
    case Variant::P3_full: return "P3_full";
    case Variant::R1_spans: return "R1_spans";
    case Variant::R2_span_indices: return "R2_span_indices";
    case Variant::R3_full: return "R3_full";
    case Variant::EIG_eigenstructure: return "EIG_eigenstructure";
  }
  return "?";
}

Variant parse_variant(const std::string& name) {
  for (Variant v : {Variant::P1_spans, Variant::P2_span_indices, Variant::P3_full, Variant::R1_spans,
                    Variant::R2_span_indices, Variant::R3_full, Variant::EIG_eigenstructure}) {
    const std::string full = variant_name(v);
    if (name == full || name == full.substr(0, full.find('_'))) return v;
  }
  throw Error(ErrorCode::MalformedPrescription, "unknown variant '" + name + "'");
}

bool is_rational(Variant v) {
  return v == Variant::R1_spans || v == Variant::R2_span_indices || v == Variant::R3_full;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "?";
}

std::vector<int> g_sequence(const std::vector<int>& k, const std::vector<int>& l) {
  if (k.size() != l.size()) throw Error(ErrorCode::LengthMismatch, "|k| != |l|");
  const size_t r = k.size();
  std::vector<int> g(r);
  for (size_t i = 0; i < r; ++i) g[i] = k[r - 1 - i] + l[i];
  std::sort(g.rbegin(), g.rend());
  return g;
}

std::vector<int> partial_sums(const std::vector<int>& v) {
  std::vector<int> out(v.size());
  std::partial_sum(v.begin(), v.end(), out.begin());
  return out;
}

bool majorizes(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "majorization of lists of different length");
  const auto pa = partial_sums(a), pb = partial_sums(b);
  for (size_t i = 0; i + 1 < a.size(); ++i)
    if (pa[i] > pb[i]) return false;
  return a.empty() || pa.back() == pb.back();
}

namespace {

void malformed(const std::string& why) { throw Error(ErrorCode::MalformedPrescription, why); }

void require_length(const std::vector<int>& v, int len, const char* name) {
  if (static_cast<int>(v.size()) != len) malformed(std::string(name) + " has the wrong length");
}

void require_desc_nonneg(const std::vector<int>& v, const char* name) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) malformed(std::string(name) + " has a negative entry");
    if (i > 0 && v[i] > v[i - 1]) malformed(std::string(name) + " is not sorted descending");
  }
}

void require_ascending(const std::vector<int>& v, const char* name) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i] < v[i - 1]) malformed(std::string(name) + " is not sorted ascending");
}

void require_monic_list(const std::vector<Poly>& v, int len, const char* name) {
  if (static_cast<int>(v.size()) != len) malformed(std::string(name) + " has the wrong length");
  for (const auto& p : v)
    if (!p.is_monic()) malformed(std::string(name) + " entries must be monic and nonzero");
}

std::vector<int> sorted_degrees(const PolyMatrix& b) {
  auto degs = b.column_degrees();
  std::sort(degs.rbegin(), degs.rend());
  return degs;
}

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

ConditionResult majorization_condition(std::vector<int> lhs, std::vector<int> rhs) {
  ConditionResult c;
  c.verdict = majorizes(lhs, rhs) ? Verdict::pass : Verdict::fail;
  c.lhs_partial = partial_sums(lhs);
  c.rhs_partial = partial_sums(rhs);
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  return c;
}

ConditionResult flag(bool ok, std::string detail) {
  ConditionResult c;
  c.verdict = ok ? Verdict::pass : Verdict::fail;
  c.detail = std::move(detail);
  return c;
}

bool all_zero(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

}  // namespace

void validate_prescription(const Prescription& p) {
  if (p.m < 1 || p.n < 1) malformed("m and n must be positive");
  if (p.r < 1 || p.r > std::min(p.m, p.n)) malformed("r must lie in [1, min(m, n)]");
  const bool spans = p.variant == Variant::P1_spans || p.variant == Variant::R1_spans;
  const bool full = p.variant == Variant::P3_full || p.variant == Variant::R3_full ||
                    p.variant == Variant::EIG_eigenstructure;
  if (is_rational(p.variant)) {
    require_monic_list(p.eps, p.r, "eps");
    require_monic_list(p.psi, p.r, "psi");
    for (int i = 0; i < p.r; ++i) {
      if (poly_gcd(p.eps[i], p.psi[i]).degree() != 0) malformed("eps_i/psi_i is not reduced");
      if (i + 1 < p.r) {
        if (!divides(p.eps[i], p.eps[i + 1])) malformed("eps chain broken");
        if (!divides(p.psi[i + 1], p.psi[i])) malformed("psi chain broken");
      }
    }
    require_length(p.q, p.r, "q");
    require_ascending(p.q, "q");
  } else {
    if (p.d < 0) malformed("degree must be nonnegative");
    require_monic_list(p.alpha, p.r, "alpha");
    for (int i = 0; i + 1 < p.r; ++i)
      if (!divides(p.alpha[i], p.alpha[i + 1])) malformed("alpha chain broken");
    require_length(p.f, p.r, "f");
    for (int x : p.f)
      if (x < 0) malformed("f has a negative entry");
    require_ascending(p.f, "f");
  }
  if (spans) {
    if (!p.K || !p.Lt) malformed("span variants need K and Lt");
    if (p.K->rows() != p.m || p.K->cols() != p.r) malformed("K must be m x r");
    if (p.Lt->rows() != p.n || p.Lt->cols() != p.r) malformed("Lt must be n x r");
    if (!is_minimal_basis(*p.K).flag) malformed("K is not a minimal basis");
    if (!is_minimal_basis(*p.Lt).flag) malformed("Lt is not a minimal basis");
  } else if (p.variant != Variant::EIG_eigenstructure) {
    require_length(p.k, p.r, "k");
    require_length(p.l, p.r, "l");
    require_desc_nonneg(p.k, "k");
    require_desc_nonneg(p.l, "l");
  }
  if (full) {
    require_length(p.right, p.n - p.r, "right");
    require_length(p.left, p.m - p.r, "left");
    require_desc_nonneg(p.right, "right");
    require_desc_nonneg(p.left, "left");
  }
}

std::vector<int> effective_k(const Prescription& p) { return p.K ? sorted_degrees(*p.K) : p.k; }
std::vector<int> effective_l(const Prescription& p) { return p.Lt ? sorted_degrees(*p.Lt) : p.l; }

FeasibilityReport check_feasibility(const Prescription& p) {
  validate_prescription(p);
  FeasibilityReport rep;
  auto& c = rep.conditions;
  for (const char* key : {"eqf1", "eqprec", "eqx0", "eqy0", "eqsums", "eqIST", "eqprec_rat"}) c[key] = {};
  const Variant v = p.variant;
  const int r = p.r;

  if (v == Variant::EIG_eigenstructure) {
    int total = sum(p.right) + sum(p.left) + sum(p.f);
    for (const auto& a : p.alpha) total += a.degree();
    c["eqf1"] = flag(p.f.front() == 0, "f_1 = " + std::to_string(p.f.front()));
    c["eqIST"] = flag(total == r * p.d, "sum = " + std::to_string(total) + ", r*d = " + std::to_string(r * p.d));
  } else {
    const auto k = effective_k(p);
    const auto l = effective_l(p);
    rep.g_sequence = g_sequence(k, l);
    const auto& g = rep.g_sequence;
    std::vector<int> lhs(r), rhs(r);
    if (is_rational(v)) {
      for (int i = 0; i < r; ++i) {
        const int j = r - 1 - i;
        lhs[i] = -g[j];
        rhs[i] = p.eps[j].degree() - p.psi[j].degree() + p.q[j];
      }
      c["eqprec_rat"] = majorization_condition(lhs, rhs);
    } else {
      for (int i = 0; i < r; ++i) {
        const int j = r - 1 - i;
        lhs[i] = p.d - g[j];
        rhs[i] = p.alpha[j].degree() + p.f[j];
      }
      c["eqf1"] = flag(p.f.front() == 0, "f_1 = " + std::to_string(p.f.front()));
      c["eqprec"] = majorization_condition(lhs, rhs);
    }
    if (v == Variant::P2_span_indices || v == Variant::R2_span_indices) {
      c["eqx0"] = flag(r < p.n || all_zero(l), "row-span indices must vanish when r = n");
      c["eqy0"] = flag(r < p.m || all_zero(k), "col-span indices must vanish when r = m");
    }
    if (v == Variant::P3_full || v == Variant::R3_full) {
      const bool ok = sum(p.left) == sum(k) && sum(p.right) == sum(l);
      c["eqsums"] = flag(ok, "sum(left) = " + std::to_string(sum(p.left)) + ", sum(k) = " + std::to_string(sum(k)) +
                                 ", sum(right) = " + std::to_string(sum(p.right)) +
                                 ", sum(l) = " + std::to_string(sum(l)));
    }
    if (v == Variant::P3_full) {
      int total = sum(p.right) + sum(p.left) + sum(p.f);
      for (const auto& a : p.alpha) total += a.degree();
      c["eqIST"] = flag(total == r * p.d, "sum = " + std::to_string(total) + ", r*d = " + std::to_string(r * p.d));
    }
  }
  rep.feasible = std::none_of(c.begin(), c.end(), [](const auto& kv) { return kv.second.verdict == Verdict::fail; });
  return rep;
}

}  // namespace structura
