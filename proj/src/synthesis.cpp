#include "structura/synthesis.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "structura/engine.hpp"
#include "structura/error.hpp"
#include "structura/feasibility.hpp"

namespace structura {

SynthOptions SynthOptions::from_env() {
  SynthOptions opt;
  if (const char* env = std::getenv("STRUCTURA_MAX_SEARCH")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) opt.max_search = v;
  }
  return opt;
}

// ---------------------------------------------------------------- minimal bases

PolyMatrix build_minimal_basis(const std::vector<int>& degrees, int ambient) {
  const int r = static_cast<int>(degrees.size());
  if (ambient < r) throw Error(ErrorCode::ShapeMismatch, "ambient dimension below the number of columns");
  for (int x : degrees)
    if (x < 0) throw Error(ErrorCode::PreconditionViolated, "negative degree");
  if (ambient == r) {
    for (int x : degrees)
      if (x != 0) throw Error(ErrorCode::ImpossibleSquareCase, "square minimal bases have degree 0");
    return PolyMatrix::identity(r);
  }
  PolyMatrix out(ambient, r);
  for (int i = 0; i < r; ++i) {
    out(i, i) = Poly::monomial(Rat(1), degrees[i]);
    out(i + 1, i) = Poly(1);
  }
  return out;
}

DualBases build_dual_minimal_bases(const std::vector<int>& deg_m, const std::vector<int>& deg_n) {
  const int r = static_cast<int>(deg_m.size()), q = static_cast<int>(deg_n.size());
  for (int x : deg_m)
    if (x < 0) throw Error(ErrorCode::PreconditionViolated, "negative degree");
  for (int x : deg_n)
    if (x < 0) throw Error(ErrorCode::PreconditionViolated, "negative degree");
  if (std::accumulate(deg_m.begin(), deg_m.end(), 0) != std::accumulate(deg_n.begin(), deg_n.end(), 0))
    throw Error(ErrorCode::SumMismatch, "degree sums differ");
  const int ambient = r + q;
  if (q == 0) return {PolyMatrix::identity(r), PolyMatrix(r, 0)};
  if (r == 0) return {PolyMatrix(q, 0), PolyMatrix::identity(q)};
  if (std::all_of(deg_m.begin(), deg_m.end(), [](int x) { return x == 0; })) {
    // Constant case: complementary coordinate blocks [I; 0] and [0; I].
    DualBases out{PolyMatrix(ambient, r), PolyMatrix(ambient, q)};
    for (int i = 0; i < r; ++i) out.M(i, i) = Poly(1);
    for (int j = 0; j < q; ++j) out.N(r + j, j) = Poly(1);
    return out;
  }

  // Staircase path through the r×q grid (north-west corner rule). Cell t
  // couples ambient coordinates t and t+1 and carries weight w_t; row i of the
  // grid becomes column i of M, grid column j becomes column j of N.
  struct Cell {
    int i, j, w;
  };
  std::vector<Cell> cells;
  std::vector<int> rem_r = deg_m, rem_c = deg_n;
  for (int i = 0, j = 0;;) {
    const int w = std::min(rem_r[i], rem_c[j]);
    cells.push_back({i, j, w});
    rem_r[i] -= w;
    rem_c[j] -= w;
    if (i == r - 1 && j == q - 1) break;
    if (i == r - 1) ++j;
    else if (j == q - 1) ++i;
    else if (rem_r[i] == 0) ++i;
    else ++j;
  }
  const int ncells = static_cast<int>(cells.size());
  std::vector<int> first_r(r, ncells), last_r(r, -1), first_c(q, ncells), last_c(q, -1);
  for (int t = 0; t < ncells; ++t) {
    first_r[cells[t].i] = std::min(first_r[cells[t].i], t);
    last_r[cells[t].i] = std::max(last_r[cells[t].i], t);
    first_c[cells[t].j] = std::min(first_c[cells[t].j], t);
    last_c[cells[t].j] = std::max(last_c[cells[t].j], t);
  }
  DualBases out{PolyMatrix(ambient, r), PolyMatrix(ambient, q)};
  for (int i = 0; i < r; ++i) {
    int exponent = 0;
    for (int c = last_r[i] + 1; c >= first_r[i]; --c) {
      if (c <= last_r[i]) exponent += cells[c].w;
      out.M(c, i) = Poly::monomial(Rat(1), exponent);
    }
  }
  for (int j = 0; j < q; ++j) {
    int exponent = 0;
    for (int c = first_c[j]; c <= last_c[j] + 1; ++c) {
      if (c > first_c[j]) exponent += cells[c - 1].w;
      out.N(c, j) = Poly::monomial(Rat((c - first_c[j]) % 2 == 0 ? 1 : -1), exponent);
    }
  }
  return out;
}

// ---------------------------------------------------------------- δ distribution

bool sa_conditions_hold(const std::vector<Poly>& alpha, const std::vector<Poly>& delta) {
  const int r = static_cast<int>(alpha.size());
  if (static_cast<int>(delta.size()) != r) return false;
  Poly prod_a(1), prod_d(1);
  for (int i = 0; i < r; ++i) {
    prod_a = prod_a * alpha[i];
    prod_d = prod_d * delta[i];
  }
  if (monic(prod_a) != monic(prod_d)) return false;
  Poly head(1);
  for (int k = 1; k < r; ++k) {
    head = head * alpha[k - 1];
    for (const auto& subset : combinations(r, k)) {
      Poly prod(1);
      for (int i : subset) prod = prod * delta[i];
      if (!divides(head, prod)) return false;
    }
  }
  return true;
}

namespace {

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.rbegin(), v.rend());
  return v;
}

struct DistributionSearch {
  int r;
  std::vector<std::vector<int>> mult;    // per root, ascending over i
  std::vector<std::vector<int>> suffix;  // per root index, Σ of remaining roots (descending)
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<std::vector<int>> chosen;

  void tick() {
    if (++nodes > budget) throw Error(ErrorCode::SearchExhausted, "distribution search exceeded its node budget");
  }

  bool remainder_ok(const std::vector<int>& h, size_t next) const {
    for (int x : h)
      if (x < 0) return false;
    return majorizes(sorted_desc(h), suffix[next]);
  }

  bool run(size_t t, std::vector<int>& h) {
    tick();
    if (t == mult.size()) return std::all_of(h.begin(), h.end(), [](int x) { return x == 0; });
    const std::vector<int> target = sorted_desc(mult[t]);
    const int total = std::accumulate(target.begin(), target.end(), 0);
    const int top = target.front();
    // Largest remaining quotas first.
    std::vector<int> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return h[a] > h[b]; });
    std::vector<int> x(r, 0);
    return assign(t, h, order, 0, total, top, target, x);
  }

  bool assign(size_t t, std::vector<int>& h, const std::vector<int>& order, int pos, int left, int top,
              const std::vector<int>& target, std::vector<int>& x) {
    tick();
    if (pos == r) {
      if (left != 0 || !majorizes(sorted_desc(x), target)) return false;
      std::vector<int> rest(r);
      for (int i = 0; i < r; ++i) rest[i] = h[i] - x[i];
      if (!remainder_ok(rest, t + 1)) return false;
      chosen[t] = x;
      return run(t + 1, rest);
    }
    const int idx = order[pos];
    const int remaining_slots = r - pos - 1;
    const int hi = std::min({h[idx], top, left});
    for (int v = hi; v >= 0; --v) {
      if (left - v > remaining_slots * top) break;
      x[idx] = v;
      if (assign(t, h, order, pos + 1, left - v, top, target, x)) return true;
    }
    x[idx] = 0;
    return false;
  }
};

}  // namespace

std::vector<Poly> distribute_invariant_factors(const std::vector<FactoredPoly>& alpha, const std::vector<int>& h,
                                               const SynthOptions& opt) {
  const int r = static_cast<int>(alpha.size());
  if (static_cast<int>(h.size()) != r) throw Error(ErrorCode::LengthMismatch, "|h| != |alpha|");
  for (const auto& a : alpha)
    if (!a.is_split()) throw Error(ErrorCode::FieldNotSplit, "invariant factor does not split over Q");
  std::vector<int> degs(r);
  for (int i = 0; i < r; ++i) degs[i] = alpha[i].expand().degree();
  std::vector<int> rev_degs(degs.rbegin(), degs.rend());
  if (std::any_of(h.begin(), h.end(), [](int x) { return x < 0; }) || !majorizes(sorted_desc(h), rev_degs))
    throw Error(ErrorCode::MajorizationFails, "diagonal degrees are not majorized by the invariant degrees");

  std::vector<Rat> roots;
  for (const auto& a : alpha)
    for (const auto& [root, m] : a.linear_factors)
      if (std::find(roots.begin(), roots.end(), root) == roots.end()) roots.push_back(root);
  std::sort(roots.begin(), roots.end());
  if (!roots.empty()) std::rotate(roots.begin(), roots.begin() + static_cast<long>(opt.seed % roots.size()), roots.end());

  DistributionSearch search;
  search.r = r;
  search.budget = opt.max_search;
  for (const auto& root : roots) {
    std::vector<int> m(r);
    for (int i = 0; i < r; ++i) m[i] = alpha[i].multiplicity(root);
    search.mult.push_back(m);
  }
  search.suffix.assign(roots.size() + 1, std::vector<int>(r, 0));
  for (int t = static_cast<int>(roots.size()) - 1; t >= 0; --t)
    for (int i = 0; i < r; ++i) search.suffix[t][i] = search.suffix[t + 1][i] + search.mult[t][r - 1 - i];
  search.chosen.assign(roots.size(), {});
  std::vector<int> quota = h;
  if (!search.run(0, quota)) throw Error(ErrorCode::SearchExhausted, "no admissible distribution found");

  std::vector<Poly> delta(r, Poly(1));
  for (size_t t = 0; t < roots.size(); ++t)
    for (int i = 0; i < r; ++i)
      if (search.chosen[t][i] > 0) delta[i] = delta[i] * pow(Poly::linear(roots[t]), search.chosen[t][i]);

  std::vector<Poly> expanded;
  for (const auto& a : alpha) expanded.push_back(a.expand());
  if (!sa_conditions_hold(expanded, delta)) throw Error(ErrorCode::Internal, "distribution fails the Sá conditions");
  return delta;
}

// ---------------------------------------------------------------- triangular realization

PolyMatrix shape_degrees(const PolyMatrix& e, const std::vector<int>& bounds) {
  const int r = e.rows();
  if (e.cols() != r || static_cast<int>(bounds.size()) != r)
    throw Error(ErrorCode::ShapeMismatch, "shape_degrees needs a square matrix and one bound per row");
  for (int i = 0; i < r; ++i)
    if (!e(i, i).is_monic() || e(i, i).degree() != bounds[i])
      throw Error(ErrorCode::NonMonicDiagonal, "diagonal entry " + std::to_string(i + 1) + " is not monic of the bound degree");
  PolyMatrix out = e;
  for (int i = r - 2; i >= 0; --i)
    for (int j = i + 1; j < r; ++j) {
      const Poly quot = poly_divmod(out(i, j), out(i, i)).first;
      out.add_col_multiple(j, i, -quot);
    }
  return out;
}

std::vector<int> diagonal_degrees(int d, const std::vector<int>& k, const std::vector<int>& l) {
  if (k.size() != l.size()) throw Error(ErrorCode::LengthMismatch, "|k| != |l|");
  const size_t r = k.size();
  std::vector<int> h(r);
  for (size_t i = 0; i < r; ++i) h[i] = d - (k[r - 1 - i] + l[i]);
  return h;
}

namespace {

struct Move {
  int p;       // acts on diagonal positions p, p+1
  int y1, y2;  // new local exponents
};

// Sequence of adjacent moves turning the exponent vector z into x (x ≺ z as
// multisets). Each move keeps both new exponents at or above the smaller old
// one, so the 2×2 block keeps its invariant factors.
std::vector<Move> local_plan(std::vector<int> z, const std::vector<int>& x) {
  const int r = static_cast<int>(z.size());
  std::vector<Move> moves;
  auto swap_at = [&](int p) {
    std::swap(z[p], z[p + 1]);
    moves.push_back({p, z[p], z[p + 1]});
  };
  const std::vector<int> xs = sorted_desc(x);
  for (int guard = 0; sorted_desc(z) != xs; ++guard) {
    if (guard > 64 * r * r + 64) throw Error(ErrorCode::Internal, "local plan did not converge");
    std::vector<int> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return z[a] > z[b]; });
    int j = -1;
    for (int i = 0; i < r; ++i)
      if (xs[i] < z[order[i]]) j = i;
    int k = -1;
    for (int i = j + 1; i < r; ++i)
      if (xs[i] > z[order[i]]) {
        k = i;
        break;
      }
    if (j < 0 || k < 0) throw Error(ErrorCode::Internal, "exponent vectors are not majorized");
    const int eps = std::min(z[order[j]] - xs[j], xs[k] - z[order[k]]);
    const int big = order[j];
    int small = order[k];
    while (small > big + 1) {
      swap_at(small - 1);
      --small;
    }
    while (small < big - 1) {
      swap_at(small);
      ++small;
    }
    z[big] -= eps;
    z[small] += eps;
    const int p = std::min(big, small);
    moves.push_back({p, z[p], z[p + 1]});
  }
  for (int i = 0; i < r; ++i) {
    int j = i;
    while (z[j] != x[i]) ++j;
    for (; j > i; --j) swap_at(j - 1);
  }
  return moves;
}

// Replace the diagonal pair at (p, p+1) by (dp, dq) with a unimodular
// transformation acting on rows and columns p, p+1 only.
void apply_move(PolyMatrix& t, int p, const Poly& dp, const Poly& dq) {
  const int r = t.rows();
  const PolyMatrix b = t.submatrix({p, p + 1}, {p, p + 1});
  const Poly g = poly_gcd(poly_gcd(b(0, 0), b(0, 1)), b(1, 1));
  if (!divides(g, dp) || !divides(g, dq)) throw Error(ErrorCode::Internal, "move changes the block invariants");
  const PolyMatrix target = PolyMatrix::from_rows({{dp, g}, {Poly(), dq}});
  const SmithDecomposition s1 = smith_form(b);
  const SmithDecomposition s2 = smith_form(target);
  if (s1.diag != s2.diag) throw Error(ErrorCode::Internal, "move changes the block invariants");
  const PolyMatrix u2 = s2.left_inv * s1.left;
  const PolyMatrix v2 = s1.right * s2.right_inv;
  PolyMatrix u = PolyMatrix::identity(r), v = PolyMatrix::identity(r);
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c) {
      u(p + a, p + c) = u2(a, c);
      v(p + a, p + c) = v2(a, c);
    }
  t = u * t * v;
}

std::vector<int> diagonal_degree_list(const PolyMatrix& t) {
  std::vector<int> out(t.rows());
  for (int i = 0; i < t.rows(); ++i) out[i] = t(i, i).degree();
  return out;
}

bool is_upper_triangular(const PolyMatrix& t) {
  for (int i = 0; i < t.rows(); ++i)
    for (int j = 0; j < i; ++j)
      if (!t(i, j).is_zero()) return false;
  return true;
}

}  // namespace

PolyMatrix triangular_realization(const std::vector<Poly>& alpha, const std::vector<Poly>& delta) {
  const int r = static_cast<int>(alpha.size());
  if (r == 0 || static_cast<int>(delta.size()) != r) throw Error(ErrorCode::PreconditionViolated, "length mismatch");
  for (int i = 0; i < r; ++i) {
    if (!alpha[i].is_monic() || !delta[i].is_monic()) throw Error(ErrorCode::PreconditionViolated, "entries must be monic");
    if (i + 1 < r && !divides(alpha[i], alpha[i + 1])) throw Error(ErrorCode::PreconditionViolated, "alpha chain broken");
  }
  if (!sa_conditions_hold(alpha, delta)) throw Error(ErrorCode::PreconditionViolated, "Sá conditions fail");

  PolyMatrix t;
  if (alpha == delta) {
    t = diag(alpha);
  } else if (r == 1) {
    t = diag(delta);
  } else if (r == 2) {
    t = PolyMatrix::from_rows({{delta[0], alpha[0]}, {Poly(), delta[1]}});
  } else {
    const FactoredPoly top = split_over_rationals(alpha.back());
    if (!top.is_split()) throw Error(ErrorCode::FieldNotSplit, "triangular completion needs split invariant factors");
    t = diag(alpha);
    for (const auto& [root, unused] : top.linear_factors) {
      std::vector<int> z(r), x(r);
      for (int i = 0; i < r; ++i) {
        z[i] = root_multiplicity(t(i, i), root);
        x[i] = root_multiplicity(delta[i], root);
      }
      const Poly lin = Poly::linear(root);
      for (const Move& mv : local_plan(z, x)) {
        auto retarget = [&](const Poly& cur, int want) {
          const int have = root_multiplicity(cur, root);
          return want >= have ? cur * pow(lin, want - have) : exact_div(cur, pow(lin, have - want));
        };
        const Poly dp = retarget(t(mv.p, mv.p), mv.y1);
        const Poly dq = retarget(t(mv.p + 1, mv.p + 1), mv.y2);
        apply_move(t, mv.p, dp, dq);
        t = shape_degrees(t, diagonal_degree_list(t));
      }
    }
  }
  for (int i = 0; i < r; ++i)
    if (t(i, i) != delta[i]) throw Error(ErrorCode::CompletionSearchExhausted, "diagonal differs from the target");
  if (!is_upper_triangular(t) || invariant_factors(t) != alpha)
    throw Error(ErrorCode::CompletionSearchExhausted, "completion fails the Smith check");
  return t;
}

}  // namespace structura
