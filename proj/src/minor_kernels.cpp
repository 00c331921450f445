#include "structura/minor_kernels.hpp"

#include <algorithm>

#include "structura/error.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace structura {

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<Poly> all_minors(const PolyMatrix& a, int k, Exec exec) {
  if (k < 1 || k > std::min(a.rows(), a.cols())) throw Error(ErrorCode::KOutOfRange, "minor order out of range");
  const auto rsets = combinations(a.rows(), k);
  const auto csets = combinations(a.cols(), k);
  const long total = static_cast<long>(rsets.size() * csets.size());
  const long nc = static_cast<long>(csets.size());
  std::vector<Poly> out(static_cast<size_t>(total));
  if (exec == Exec::serial) {
    for (long t = 0; t < total; ++t) out[t] = det(a.submatrix(rsets[t / nc], csets[t % nc]));
    return out;
  }
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 4)
#endif
  for (long t = 0; t < total; ++t) out[t] = det(a.submatrix(rsets[t / nc], csets[t % nc]));
  return out;
}

Poly minors_gcd(const PolyMatrix& a, int k, Exec exec) {
  Poly g;
  for (const auto& m : all_minors(a, k, exec)) {
    if (m.is_zero()) continue;
    g = g.is_zero() ? monic(m) : poly_gcd(g, m);
    if (g.degree() == 0) break;
  }
  return g;
}

int minors_max_degree(const PolyMatrix& a, int k, Exec exec) {
  int best = NEG_INF;
  for (const auto& m : all_minors(a, k, exec)) best = std::max(best, m.degree());
  return best;
}

}  // namespace structura
