#include "structura/minor_select.hpp"

#include "structura/error.hpp"

namespace structura {

IndexTuple star(const IndexTuple& z, int r) {
  IndexTuple out(z.size());
  for (size_t i = 0; i < z.size(); ++i) out[i] = r - z[z.size() - 1 - i] + 1;
  return out;
}

bool is_index_tuple(const IndexTuple& z, int r) {
  for (size_t i = 0; i < z.size(); ++i) {
    if (z[i] < 1 || z[i] > r) return false;
    if (i > 0 && z[i] <= z[i - 1]) return false;
  }
  return !z.empty();
}

bool leq(const IndexTuple& a, const IndexTuple& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

namespace {

std::vector<int> zero_based(const IndexTuple& t) {
  std::vector<int> out(t.size());
  for (size_t i = 0; i < t.size(); ++i) out[i] = t[i] - 1;
  return out;
}

std::vector<int> range(int from, int to) {
  std::vector<int> out;
  for (int i = from; i < to; ++i) out.push_back(i);
  return out;
}

std::pair<IndexTuple, IndexTuple> select_rec(const PolyMatrix& e, const IndexTuple& z) {
  const int r = e.rows();
  const int k = static_cast<int>(z.size());
  if (k == r) {
    IndexTuple all(r);
    for (int i = 0; i < r; ++i) all[i] = i + 1;
    return {all, all};
  }
  if (k == 1) {
    const int rows = r - z[0] + 1;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < z[0]; ++j)
        if (!e(i, j).is_zero()) return {{i + 1}, {j + 1}};
    throw Error(ErrorCode::Internal, "no nonzero entry in the leading block");
  }
  // u: first column of the top r−1 rows that depends on the preceding ones.
  const PolyMatrix x = e.row_block(0, r - 1);
  int u = 0;
  for (int i = 1; i <= r; ++i)
    if (rank(x.column_block(0, i)) == i - 1) {
      u = i;
      break;
    }
  if (u == 0) throw Error(ErrorCode::Internal, "top block has full column rank");
  std::vector<int> cols = range(0, r);
  cols.erase(cols.begin() + (u - 1));
  const PolyMatrix e_hat = e.submatrix(range(0, r - 1), cols);
  int w = 0;
  for (int i = 1; i <= k; ++i)
    if (z[i - 1] == i) w = i;

  if (w < u) {
    IndexTuple z_hat(k);
    for (int i = 1; i <= k; ++i) z_hat[i - 1] = i <= w ? z[i - 1] : z[i - 1] - 1;
    auto [i_hat, j_hat] = select_rec(e_hat, z_hat);
    IndexTuple j(k);
    for (int i = 0; i < k; ++i) j[i] = j_hat[i] < u ? j_hat[i] : j_hat[i] + 1;
    return {i_hat, j};
  }
  IndexTuple z_hat(k - 1);
  for (int i = 1; i <= k - 1; ++i) z_hat[i - 1] = i <= u - 1 ? i : z[i] - 1;
  auto [i_hat, j_hat] = select_rec(e_hat, z_hat);
  IndexTuple i_out = i_hat;
  i_out.push_back(r);
  IndexTuple j(k);
  for (int i = 1; i <= k; ++i) j[i - 1] = i <= u ? i : j_hat[i - 2] + 1;
  return {i_out, j};
}

void check_input(const PolyMatrix& e, const IndexTuple& z) {
  if (e.rows() != e.cols()) throw Error(ErrorCode::ShapeMismatch, "minor selection needs a square matrix");
  if (!is_index_tuple(z, e.rows())) throw Error(ErrorCode::KOutOfRange, "Z is not an index tuple in [1, r]");
  if (det(e).is_zero()) throw Error(ErrorCode::SingularInput, "matrix is singular");
}

}  // namespace

MinorSelection select_nonzero_minor(const PolyMatrix& e, const IndexTuple& z) {
  check_input(e, z);
  auto [i, j] = select_rec(e, z);
  MinorSelection out{i, j, det(e.submatrix(zero_based(i), zero_based(j)))};
  if (!leq(out.J, z) || !leq(out.I, star(z, e.rows())) || out.minor.is_zero())
    throw Error(ErrorCode::Internal, "selected minor violates its bounds");
  return out;
}

std::vector<MinorSelection> admissible_pairs(const PolyMatrix& e, const IndexTuple& z, Exec exec) {
  check_input(e, z);
  const int r = e.rows();
  const int k = static_cast<int>(z.size());
  const IndexTuple zs = star(z, r);
  std::vector<IndexTuple> is, js;
  for (auto c : combinations(r, k)) {
    for (int& v : c) ++v;
    if (leq(c, zs)) is.push_back(c);
    if (leq(c, z)) js.push_back(c);
  }
  const long nj = static_cast<long>(js.size());
  const long total = static_cast<long>(is.size()) * nj;
  std::vector<Poly> minors(static_cast<size_t>(total));
  auto eval = [&](long t) { minors[t] = det(e.submatrix(zero_based(is[t / nj]), zero_based(js[t % nj]))); };
  if (exec == Exec::serial) {
    for (long t = 0; t < total; ++t) eval(t);
  } else {
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 4)
#endif
    for (long t = 0; t < total; ++t) eval(t);
  }
  std::vector<MinorSelection> out;
  for (long t = 0; t < total; ++t)
    if (!minors[t].is_zero()) out.push_back({is[t / nj], js[t % nj], minors[t]});
  return out;
}

}  // namespace structura
