#include <algorithm>

#include "structura/engine.hpp"
#include "structura/error.hpp"

namespace structura {

namespace {

// Elimination state. Row operations on `a` are mirrored on `left` and, in
// inverse form, on `left_inv`; column operations likewise on the right side.
struct SmithWork {
  PolyMatrix a;
  bool track;
  PolyMatrix left, left_inv, right, right_inv;

  SmithWork(const PolyMatrix& p, bool with_transforms) : a(p), track(with_transforms) {
    if (track) {
      left = left_inv = PolyMatrix::identity(p.rows());
      right = right_inv = PolyMatrix::identity(p.cols());
    }
  }

  void swap_rows(int i, int j) {
    a.swap_rows(i, j);
    if (track) {
      left.swap_rows(i, j);
      left_inv.swap_cols(i, j);
    }
  }
  void swap_cols(int i, int j) {
    a.swap_cols(i, j);
    if (track) {
      right.swap_cols(i, j);
      right_inv.swap_rows(i, j);
    }
  }
  // row[dst] += f row[src]
  void add_row(int dst, int src, const Poly& f) {
    a.add_row_multiple(dst, src, f);
    if (track) {
      left.add_row_multiple(dst, src, f);
      left_inv.add_col_multiple(src, dst, -f);
    }
  }
  // col[dst] += f col[src]
  void add_col(int dst, int src, const Poly& f) {
    a.add_col_multiple(dst, src, f);
    if (track) {
      right.add_col_multiple(dst, src, f);
      right_inv.add_row_multiple(src, dst, -f);
    }
  }
  void scale_row(int i, const Rat& c) {
    a.scale_row(i, c);
    if (track) {
      left.scale_row(i, c);
      left_inv.scale_col(i, 1 / c);
    }
  }
};

// Least-degree nonzero entry of the trailing block, ties to smallest (i, j).
bool find_pivot(const PolyMatrix& a, int t, int* pi, int* pj) {
  int best = NEG_INF;
  for (int i = t; i < a.rows(); ++i)
    for (int j = t; j < a.cols(); ++j) {
      const int d = a(i, j).degree();
      if (d == NEG_INF) continue;
      if (best == NEG_INF || d < best) {
        best = d;
        *pi = i;
        *pj = j;
      }
    }
  return best != NEG_INF;
}

int run_smith(SmithWork& w) {
  PolyMatrix& a = w.a;
  const int m = a.rows(), n = a.cols();
  int t = 0;
  for (; t < std::min(m, n); ++t) {
    int pi = 0, pj = 0;
    if (!find_pivot(a, t, &pi, &pj)) break;
    while (true) {
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (a(i, t).is_zero()) continue;
        auto [q, r] = poly_divmod(a(i, t), a(t, t));
        w.add_row(i, t, -q);
        if (!r.is_zero()) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (a(t, j).is_zero()) continue;
        auto [q, r] = poly_divmod(a(t, j), a(t, t));
        w.add_col(j, t, -q);
        if (!r.is_zero()) clean = false;
      }
      if (clean) {
        // Row and column t are clear; the pivot must divide the rest.
        int bad = -1;
        for (int i = t + 1; i < m && bad < 0; ++i)
          for (int j = t + 1; j < n; ++j)
            if (!a(i, j).is_zero() && !divides(a(t, t), a(i, j))) {
              bad = i;
              break;
            }
        if (bad < 0) break;
        w.add_row(t, bad, Poly(1));
      }
      find_pivot(a, t, &pi, &pj);
    }
    const Rat lc = a(t, t).leading();
    if (lc != 1) w.scale_row(t, 1 / lc);
  }
  return t;
}

}  // namespace

SmithDecomposition smith_form(const PolyMatrix& p) {
  SmithWork w(p, true);
  const int r = run_smith(w);
  SmithDecomposition out;
  out.rank = r;
  for (int i = 0; i < r; ++i) out.diag.push_back(w.a(i, i));
  out.left = std::move(w.left);
  out.left_inv = std::move(w.left_inv);
  out.right = std::move(w.right);
  out.right_inv = std::move(w.right_inv);
  return out;
}

std::vector<Poly> invariant_factors(const PolyMatrix& p) {
  SmithWork w(p, false);
  const int r = run_smith(w);
  std::vector<Poly> out;
  for (int i = 0; i < r; ++i) out.push_back(w.a(i, i));
  return out;
}

Poly gcd_minors_oracle(const PolyMatrix& p, int k, Exec exec) {
  if (k < 1 || k > rank(p)) throw Error(ErrorCode::KOutOfRange, "k must lie in [1, rank]");
  return minors_gcd(p, k, exec);
}

int max_minor_degree(const PolyMatrix& p, int k, Exec exec) {
  if (k < 1 || k > rank(p)) throw Error(ErrorCode::KOutOfRange, "k must lie in [1, rank]");
  return minors_max_degree(p, k, exec);
}

}  // namespace structura
