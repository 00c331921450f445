#include <doctest.h>

#include "structura/structure.hpp"
#include "structura/synthesis.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"

using namespace structura;
using namespace structura::testing;

namespace {

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

void check_identities(const PolyStructuralData& s) {
  REQUIRE(s.r >= 1);
  CHECK(s.f.front() == 0);
  for (int i = 0; i < s.r; ++i) CHECK(s.q[i] == s.f[i] - s.d);
  CHECK(static_cast<int>(s.k.size()) == s.r);
  CHECK(static_cast<int>(s.l.size()) == s.r);
  CHECK(static_cast<int>(s.right.size()) == s.n - s.r);
  CHECK(static_cast<int>(s.left.size()) == s.m - s.r);
  CHECK(sum(s.left) == sum(s.k));
  CHECK(sum(s.right) == sum(s.l));
  int alpha_deg = 0;
  for (const auto& a : s.alpha) alpha_deg += a.degree();
  CHECK(sum(s.k) + sum(s.l) + sum(s.f) + alpha_deg == s.r * s.d);
  CHECK(sum(s.right) + sum(s.left) + sum(s.f) + alpha_deg == s.r * s.d);
}

void check_bases(const PolyMatrix& p, const PolyStructuralData& s) {
  CHECK(is_minimal_basis(s.colspan_basis).flag);
  CHECK(is_minimal_basis(s.rowspan_basis).flag);
  CHECK(s.colspan_basis.column_degrees() == s.k);
  CHECK(s.rowspan_basis.column_degrees() == s.l);
  // Column span equality: both augmentations keep rank r.
  CHECK(rank(hconcat(p, s.colspan_basis)) == s.r);
  CHECK(rank(hconcat(p.transpose(), s.rowspan_basis)) == s.r);
  if (s.n > s.r) {
    CHECK(is_minimal_basis(s.right_null_basis).flag);
    CHECK((p * s.right_null_basis).is_zero());
    CHECK(s.right_null_basis.column_degrees() == s.right);
  }
  if (s.m > s.r) {
    CHECK(is_minimal_basis(s.left_null_basis).flag);
    CHECK((s.left_null_basis.transpose() * p).is_zero());
    CHECK(s.left_null_basis.column_degrees() == s.left);
  }
}

}  // namespace

TEST_CASE("partial multiplicities examples") {
  CHECK(partial_multiplicities(M({{"1", "0"}, {"0", "s^2"}}), Rat(0)) == std::vector<int>{0, 2});
  CHECK(partial_multiplicities(PolyMatrix::identity(3), Rat(5)) == std::vector<int>{0, 0, 0});
  CHECK(partial_multiplicities(M({{"s", "1"}, {"0", "s"}}), Rat(0)) == std::vector<int>{0, 2});
  CHECK(throws_code(ErrorCode::ZeroMatrix, [] { partial_multiplicities(PolyMatrix(2, 2), Rat(0)); }));
}

TEST_CASE("structure at infinity examples") {
  const auto a = inf_structure(M({{"s", "1"}, {"0", "s"}}));
  CHECK(a.d == 1);
  CHECK(a.f == std::vector<int>{0, 0});
  CHECK(a.q == std::vector<int>{-1, -1});
  const auto b = inf_structure(M({{"1", "0"}, {"0", "s"}}));
  CHECK(b.d == 1);
  CHECK(b.f == std::vector<int>{0, 1});
  CHECK(b.q == std::vector<int>{-1, 0});
  const auto c = inf_structure(M({{"2", "1"}, {"1", "1"}}));
  CHECK(c.d == 0);
  CHECK(c.f == std::vector<int>{0, 0});
  CHECK(c.q == std::vector<int>{0, 0});
  CHECK(throws_code(ErrorCode::ZeroMatrix, [] { inf_structure(PolyMatrix(1, 1)); }));
}

TEST_CASE("subspace minimal bases examples") {
  const auto id = subspace_minimal_basis(PolyMatrix::identity(3), Subspace::colspan);
  CHECK(id.basis == PolyMatrix::identity(3));
  CHECK(id.indices == std::vector<int>{0, 0, 0});
  const PolyMatrix p = M({{"s", "s^2"}, {"1", "s"}});
  const auto col = subspace_minimal_basis(p, Subspace::colspan);
  CHECK(col.indices == std::vector<int>{1});
  CHECK(col.basis == M({{"s"}, {"1"}}));
  const auto rn = subspace_minimal_basis(p, Subspace::rightnull);
  CHECK(rn.indices == std::vector<int>{1});
  CHECK((p * rn.basis).is_zero());
  CHECK(rn.basis == M({{"s"}, {"-1"}}));
  const auto ln = subspace_minimal_basis(PolyMatrix::identity(2), Subspace::leftnull);
  CHECK(ln.basis.cols() == 0);
  CHECK(ln.indices.empty());
}

TEST_CASE("extraction examples") {
  const auto a = extract_poly_structure(PolyMatrix::identity(2));
  CHECK(a.r == 2);
  CHECK(a.d == 0);
  CHECK(a.alpha == std::vector<Poly>{1, 1});
  CHECK(a.f == std::vector<int>{0, 0});
  CHECK(a.k == std::vector<int>{0, 0});
  CHECK(a.l == std::vector<int>{0, 0});
  CHECK(a.right.empty());
  CHECK(a.left.empty());

  const auto b = extract_poly_structure(M({{"s", "1"}, {"0", "s"}}));
  CHECK(b.r == 2);
  CHECK(b.d == 1);
  CHECK(b.alpha == std::vector<Poly>{1, P("s^2")});
  CHECK(b.f == std::vector<int>{0, 0});
  CHECK(b.k == std::vector<int>{0, 0});
  check_identities(b);

  // Rank one with entry gcd 1, so the single invariant factor is 1.
  const PolyMatrix c_in = M({{"s", "s^2"}, {"1", "s"}});
  const auto c = extract_poly_structure(c_in);
  CHECK(c.r == 1);
  CHECK(c.d == 2);
  CHECK(c.alpha == std::vector<Poly>{1});
  CHECK(c.f == std::vector<int>{0});
  CHECK(c.k == std::vector<int>{1});
  CHECK(c.l == std::vector<int>{1});
  CHECK(c.right == std::vector<int>{1});
  CHECK(c.left == std::vector<int>{1});
  check_identities(c);
  check_bases(c_in, c);

  CHECK(throws_code(ErrorCode::ZeroMatrix, [] { extract_poly_structure(PolyMatrix(2, 3)); }));
}

TEST_CASE("property: planted Smith forms are recovered") {
  Rng rng(41);
  for (int t = 0; t < 60; ++t) {
    const int r = uniform(rng, 1, 3);
    const int m = uniform(rng, r, 4), n = uniform(rng, r, 4);
    const auto alpha = random_split_chain(rng, r, 4);
    PolyMatrix s(m, n);
    for (int i = 0; i < r; ++i) s(i, i) = alpha[i];
    const PolyMatrix p = random_unimodular(rng, m, 5) * s * random_unimodular(rng, n, 5);
    const auto data = extract_poly_structure(p);
    CHECK(data.r == r);
    CHECK(data.alpha == alpha);
    check_identities(data);
    check_bases(p, data);
  }
}

TEST_CASE("property: extraction identities on random matrices") {
  Rng rng(42);
  for (int t = 0; t < 80; ++t) {
    const int m = uniform(rng, 1, 4), n = uniform(rng, 1, 4);
    const PolyMatrix p = t % 2 ? random_nonzero_matrix(rng, m, n, 2)
                               : random_rank_matrix(rng, m, n, uniform(rng, 1, std::min(m, n)), 3);
    if (p.is_zero()) continue;
    const auto data = extract_poly_structure(p);
    check_identities(data);
    check_bases(p, data);
    if (data.r == n) CHECK(data.l == std::vector<int>(n, 0));
    if (data.r == m) CHECK(data.k == std::vector<int>(m, 0));
  }
}

TEST_CASE("property: normalization keeps span and degrees") {
  Rng rng(43);
  for (int t = 0; t < 30; ++t) {
    const int r = uniform(rng, 1, 3), m = uniform(rng, r + 1, 5);
    const auto degs = random_desc(rng, r, 2);
    const PolyMatrix b = scrambled_minimal_basis(rng, degs, m);
    const PolyMatrix nb = normalize_basis(b);
    CHECK(same_span_unimodular(nb, b));
    CHECK(nb.column_degrees() == degs);
    CHECK(is_minimal_basis(nb).flag);
    CHECK(normalize_basis(nb) == nb);
  }
}

TEST_CASE("clearing denominators") {
  RationalMatrix a(1, 1);
  a(0, 0) = RatFn(Poly(1), P("s"));
  const auto ca = clear_denominators(a);
  CHECK(ca.psi1 == P("s"));
  CHECK(ca.p == M({{"1"}}));

  RationalMatrix b(2, 2);
  b(0, 0) = RatFn(Poly(1), P("s"));
  b(0, 1) = Poly(1);
  b(1, 1) = RatFn(Poly(1), P("s - 1"));
  const auto cb = clear_denominators(b);
  CHECK(cb.psi1 == P("s(s-1)"));
  CHECK(cb.p == M({{"s - 1", "s^2 - s"}, {"0", "s"}}));

  const PolyMatrix poly = M({{"s", "1"}});
  const auto cc = clear_denominators(RationalMatrix::from_poly(poly));
  CHECK(cc.psi1 == Poly(1));
  CHECK(cc.p == poly);
  CHECK(throws_code(ErrorCode::ZeroMatrix, [] { clear_denominators(RationalMatrix(1, 2)); }));
}

TEST_CASE("rational extraction examples") {
  RationalMatrix a(1, 1);
  a(0, 0) = RatFn(Poly(1), P("s"));
  const auto da = extract_rational_structure(a);
  CHECK(da.eps == std::vector<Poly>{1});
  CHECK(da.psi == std::vector<Poly>{P("s")});
  CHECK(da.q == std::vector<int>{1});
  CHECK(da.k == std::vector<int>{0});
  CHECK(da.l == std::vector<int>{0});

  RationalMatrix b(1, 2);
  b(0, 0) = Poly(1);
  b(0, 1) = RatFn(Poly(1), P("s - 1"));
  const auto db = extract_rational_structure(b);
  CHECK(db.r == 1);
  CHECK(db.eps == std::vector<Poly>{1});
  CHECK(db.psi == std::vector<Poly>{P("s - 1")});
  CHECK(db.q == std::vector<int>{0});

  const PolyMatrix p = M({{"1", "0"}, {"0", "s"}});
  const auto dp = extract_rational_structure(RationalMatrix::from_poly(p));
  const auto sp = extract_poly_structure(p);
  CHECK(dp.psi == std::vector<Poly>{1, 1});
  CHECK(dp.eps == sp.alpha);
  CHECK(dp.q == sp.q);
}

TEST_CASE("property: rational data agree with the cleared polynomial matrix") {
  Rng rng(44);
  for (int t = 0; t < 40; ++t) {
    const int m = uniform(rng, 1, 3), n = uniform(rng, 1, 3);
    const RationalMatrix r = random_rational_matrix(rng, m, n, 2);
    const auto data = extract_rational_structure(r);
    const auto cleared = clear_denominators(r);
    const auto pdata = extract_poly_structure(cleared.p);
    CHECK(data.psi1 == cleared.psi1);
    REQUIRE(data.r == pdata.r);
    for (int i = 0; i < data.r; ++i) {
      CHECK(poly_gcd(data.eps[i], data.psi[i]) == Poly(1));
      CHECK(RatFn(data.eps[i], data.psi[i]) == RatFn(pdata.alpha[i], cleared.psi1));
      CHECK(data.q[i] == pdata.q[i] + cleared.psi1.degree());
      if (i > 0) {
        CHECK(divides(data.eps[i - 1], data.eps[i]));
        CHECK(divides(data.psi[i], data.psi[i - 1]));
      }
    }
    CHECK(data.k == pdata.k);
    CHECK(data.l == pdata.l);
    CHECK(data.right == pdata.right);
    CHECK(data.left == pdata.left);
    CHECK(data.colspan_basis == pdata.colspan_basis);
    int total = sum(data.k) + sum(data.l) + sum(data.q);
    for (int i = 0; i < data.r; ++i) total += data.eps[i].degree() - data.psi[i].degree();
    CHECK(total == 0);
  }
}

TEST_CASE("span comparison") {
  const PolyMatrix k = M({{"s"}, {"1"}});
  CHECK(same_span_unimodular(k, M({{"-2s"}, {"-2"}})));
  CHECK_FALSE(same_span_unimodular(k, M({{"s^2"}, {"s"}})));
  CHECK_FALSE(same_span_unimodular(k, M({{"1"}, {"s"}})));
}
