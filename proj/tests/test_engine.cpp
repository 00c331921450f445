#include <doctest.h>

#include "structura/engine.hpp"
#include "structura/structure.hpp"
#include "structura/synthesis.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"

using namespace structura;
using namespace structura::testing;

namespace {

PolyMatrix padded_diag(const SmithDecomposition& s, int m, int n) {
  PolyMatrix d(m, n);
  for (int i = 0; i < s.rank; ++i) d(i, i) = s.diag[i];
  return d;
}

void check_smith(const PolyMatrix& p) {
  const SmithDecomposition s = smith_form(p);
  CHECK(s.left * p * s.right == padded_diag(s, p.rows(), p.cols()));
  CHECK(is_unimodular(s.left));
  CHECK(is_unimodular(s.right));
  CHECK(s.left * s.left_inv == PolyMatrix::identity(p.rows()));
  CHECK(s.right * s.right_inv == PolyMatrix::identity(p.cols()));
  CHECK(s.rank == rank(p));
  Poly prod(1);
  for (int k = 1; k <= s.rank; ++k) {
    CHECK(s.diag[k - 1].is_monic());
    if (k > 1) CHECK(divides(s.diag[k - 2], s.diag[k - 1]));
    prod = prod * s.diag[k - 1];
    CHECK(gcd_minors_oracle(p, k) == prod);
  }
  CHECK(invariant_factors(p) == s.diag);
}

}  // namespace

TEST_CASE("Smith form examples") {
  const auto a = smith_form(PolyMatrix::identity(2));
  CHECK(a.diag == std::vector<Poly>{1, 1});
  CHECK(a.left == PolyMatrix::identity(2));
  CHECK(a.right == PolyMatrix::identity(2));
  CHECK(smith_form(M({{"s", "1"}, {"0", "s"}})).diag == std::vector<Poly>{1, P("s^2")});
  CHECK(smith_form(M({{"s", "0"}, {"0", "s(s-1)"}})).diag == std::vector<Poly>{P("s"), P("s(s-1)")});
  check_smith(M({{"s", "1"}, {"0", "s"}}));
}

TEST_CASE("property: Smith form against the gcd-of-minors oracle") {
  Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    const int m = uniform(rng, 1, 4), n = uniform(rng, 1, 4);
    const PolyMatrix p = t % 3 == 0 ? random_rank_matrix(rng, m, n, uniform(rng, 1, std::min(m, n)), 3)
                                    : random_matrix(rng, m, n, 2);
    check_smith(p);
  }
}

TEST_CASE("gcd of minors examples") {
  const PolyMatrix p = M({{"s", "1"}, {"0", "s"}});
  CHECK(gcd_minors_oracle(p, 1) == Poly(1));
  CHECK(gcd_minors_oracle(p, 2) == P("s^2"));
  CHECK(gcd_minors_oracle(PolyMatrix::identity(3), 2) == Poly(1));
  CHECK(throws_code(ErrorCode::KOutOfRange, [&] { gcd_minors_oracle(p, 3); }));
  CHECK(throws_code(ErrorCode::KOutOfRange, [&] { gcd_minors_oracle(p, 0); }));
}

TEST_CASE("column reduction examples") {
  const PolyMatrix a = M({{"s", "0"}, {"0", "1"}});
  const auto ra = column_reduce(a);
  CHECK(ra.reduced == a);
  CHECK(ra.right_transform == PolyMatrix::identity(2));
  // col2 − s·col1 leaves (0, 1), so the degrees drop to (1, 0).
  const auto rb = column_reduce(M({{"s", "s^2"}, {"1", "s+1"}}));
  auto degs = rb.column_degrees;
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<int>{0, 1});
  CHECK(is_column_proper(rb.reduced));
  Rng rng(32);
  const auto ru = column_reduce(random_unimodular(rng, 3, 8));
  CHECK(ru.column_degrees == std::vector<int>{0, 0, 0});
  CHECK(throws_code(ErrorCode::RankDeficient, [] { column_reduce(M({{"s", "s^2"}, {"1", "s"}})); }));
}

TEST_CASE("property: column reduction") {
  Rng rng(33);
  for (int t = 0; t < 60; ++t) {
    const int n = uniform(rng, 1, 3), m = uniform(rng, n, 4);
    PolyMatrix p = random_matrix(rng, m, n, 2);
    if (rank(p) < n) continue;
    p = p * random_unimodular(rng, n, 4);
    const auto cr = column_reduce(p);
    CHECK(p * cr.right_transform == cr.reduced);
    CHECK(is_unimodular(cr.right_transform));
    CHECK(is_column_proper(cr.reduced));
    CHECK(rank(cr.reduced.leading_column_matrix()) == n);
    const auto before = p.column_degrees();
    CHECK(std::accumulate(cr.column_degrees.begin(), cr.column_degrees.end(), 0) <=
          std::accumulate(before.begin(), before.end(), 0));
  }
}

TEST_CASE("reversal examples") {
  CHECK(reversal(M({{"s", "1"}, {"0", "s"}})) == M({{"1", "s"}, {"0", "1"}}));
  CHECK(reversal(M({{"2", "-1"}})) == M({{"2", "-1"}}));
  CHECK(throws_code(ErrorCode::ZeroMatrix, [] { reversal(PolyMatrix(2, 2)); }));
  Rng rng(34);
  for (int t = 0; t < 40; ++t) {
    const PolyMatrix p = random_nonzero_matrix(rng, 2, 3, 3);
    const PolyMatrix rev = reversal(p);
    CHECK(rev.degree() <= p.degree());
    CHECK(rev.coefficient(0).data == p.coefficient(p.degree()).data);
    if (!p.coefficient(0).data.empty() && rank(p.coefficient(0)) > 0 && rev.degree() == p.degree())
      CHECK(reversal(rev) == p);
  }
}

TEST_CASE("maximal minor degree examples") {
  const PolyMatrix p = M({{"s", "1"}, {"0", "s"}});
  CHECK(max_minor_degree(p, 2) == 2);
  CHECK(max_minor_degree(p, 1) == 1);
  CHECK(throws_code(ErrorCode::KOutOfRange, [&] { max_minor_degree(p, 3); }));
}

TEST_CASE("property: maximal minor degree is k·d minus the infinite multiplicities") {
  Rng rng(35);
  for (int t = 0; t < 80; ++t) {
    const int m = uniform(rng, 1, 3), n = uniform(rng, 1, 3);
    const PolyMatrix p = random_nonzero_matrix(rng, m, n, 3);
    const InfStructure inf = inf_structure(p);
    const int r = rank(p);
    int fsum = 0;
    for (int k = 1; k <= r; ++k) {
      fsum += inf.f[k - 1];
      CHECK(max_minor_degree(p, k) == k * inf.d - fsum);
      CHECK(max_minor_degree(p, k, Exec::serial) == max_minor_degree(p, k, Exec::parallel));
    }
  }
}

TEST_CASE("minimal basis test examples") {
  const auto built = is_minimal_basis(build_minimal_basis({2, 1}, 4));
  CHECK(built.flag);
  CHECK(built.column_degrees == std::vector<int>{2, 1});
  CHECK_FALSE(is_minimal_basis(M({{"s"}, {"s"}})).flag);
  const auto c = is_minimal_basis(M({{"1"}, {"s"}, {"s^2"}}));
  CHECK(c.flag);
  CHECK(c.column_degrees == std::vector<int>{2});
  // Full rank everywhere but not column proper.
  CHECK_FALSE(is_minimal_basis(M({{"1", "s"}, {"0", "1"}, {"s", "s^2 + 1"}})).flag);
}

TEST_CASE("property: minimal basis membership is stable under admissible changes of basis") {
  Rng rng(36);
  for (int t = 0; t < 60; ++t) {
    const int r = uniform(rng, 1, 3), m = uniform(rng, r, 5);
    const auto degs = m == r ? std::vector<int>(r, 0) : random_desc(rng, r, 2);
    const PolyMatrix k = build_minimal_basis(degs, m);
    // Constant invertible left factor keeps the degrees.
    PolyMatrix c = PolyMatrix::identity(m);
    for (int s = 0; s < m && m > 1; ++s) c.add_row_multiple(s, (s + 1) % m, Poly(Rat(uniform(rng, -2, 2))));
    if (det(c).is_zero()) continue;
    const auto left = is_minimal_basis(c * k);
    CHECK(left.flag);
    CHECK(left.column_degrees == degs);
    // Unimodular right factors that keep the columns degree compatible.
    const PolyMatrix scrambled = scrambled_minimal_basis(rng, degs, m);
    CHECK(is_minimal_basis(scrambled).flag);
  }
}

TEST_CASE("Möbius frame examples") {
  const PolyMatrix c = M({{"2", "-1"}, {"1/2", "0"}});
  CHECK(mobius_frame(c, Rat(0), 0) == c);
  CHECK(mobius_frame(M({{"s"}}), Rat(0), 1) == M({{"1"}}));
  CHECK(mobius_frame(M({{"s+1"}}), Rat(1), 1) == M({{"s"}}));
  CHECK(throws_code(ErrorCode::DegreeTooSmall, [] { mobius_frame(M({{"s^2"}}), Rat(0), 1); }));
}

TEST_CASE("property: Möbius frame and its inverse") {
  Rng rng(37);
  for (int t = 0; t < 60; ++t) {
    const PolyMatrix b = random_nonzero_matrix(rng, 2, 2, 3);
    const Rat a(uniform(rng, -2, 2));
    const int d = b.degree();
    const PolyMatrix fa = mobius_frame(b, a, d);
    if (fa.degree() != d) continue;
    CHECK(inverse_mobius_frame(fa, a, d) == b);
  }
}

TEST_CASE("Möbius basis scaling") {
  CHECK(scale_basis_mobius(PolyMatrix::identity(3), Rat(4), {0, 0, 0}) == PolyMatrix::identity(3));
  CHECK(scale_basis_mobius(M({{"s"}, {"1"}}), Rat(0), {1}) == M({{"1"}, {"s"}}));
  const auto res = is_minimal_basis(scale_basis_mobius(build_minimal_basis({1, 1}, 4), Rat(1), {1, 1}));
  CHECK(res.flag);
  CHECK(res.column_degrees == std::vector<int>{1, 1});
  CHECK(throws_code(ErrorCode::DegreeMismatch, [] { scale_basis_mobius(M({{"s"}, {"1"}}), Rat(0), {2}); }));
  Rng rng(38);
  for (int t = 0; t < 30; ++t) {
    const int r = uniform(rng, 1, 3), m = uniform(rng, r, 5);
    const auto degs = m == r ? std::vector<int>(r, 0) : random_desc(rng, r, 2);
    const auto out = is_minimal_basis(scale_basis_mobius(scrambled_minimal_basis(rng, degs, m), Rat(uniform(rng, -2, 2)), degs));
    CHECK(out.flag);
    auto got = out.column_degrees;
    std::sort(got.rbegin(), got.rend());
    CHECK(got == degs);
  }
}
