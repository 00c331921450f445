#include <doctest.h>

#include "structura/error.hpp"
#include "structura/json_io.hpp"
#include "structura/poly.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"

using namespace structura;
using namespace structura::testing;

TEST_CASE("degree and zero polynomial") {
  CHECK(Poly().degree() == NEG_INF);
  CHECK(Poly(0).is_zero());
  CHECK(Poly(3).degree() == 0);
  CHECK(P("s^3 - s").degree() == 3);
  CHECK(Poly(std::vector<Rat>{1, 2, 0, 0}).degree() == 1);
}

TEST_CASE("divmod examples") {
  auto [q, r] = poly_divmod(P("s^2 - 1"), P("s - 1"));
  CHECK(q == P("s + 1"));
  CHECK(r.is_zero());
  auto [q2, r2] = poly_divmod(P("s^2 + 1"), P("s"));
  CHECK(q2 == P("s"));
  CHECK(r2 == Poly(1));
  CHECK(throws_code(ErrorCode::DivisionByZeroPoly, [] { poly_divmod(Poly(1), Poly()); }));
}

TEST_CASE("gcd examples") {
  CHECK(poly_gcd(P("s^2 - 1"), P("s - 1")) == P("s - 1"));
  CHECK(poly_gcd(P("2s + 4"), Poly()) == P("s + 2"));
  CHECK(poly_gcd(P("(s-1)^2*(s-2)"), P("(s-1)*(s-3)")) == P("s - 1"));
  CHECK(throws_code(ErrorCode::BothZero, [] { poly_gcd(Poly(), Poly()); }));
}

TEST_CASE("split over the rationals") {
  const auto a = split_over_rationals(P("s^2 - 1"));
  CHECK(a.is_split());
  CHECK(a.multiplicity(Rat(1)) == 1);
  CHECK(a.multiplicity(Rat(-1)) == 1);
  const auto b = split_over_rationals(P("(s^2 + 1)^2"));
  CHECK(b.linear_factors.empty());
  CHECK(b.cofactor == P("(s^2 + 1)^2"));
  const auto c = split_over_rationals(P("s^3 - s^2"));
  CHECK(c.multiplicity(Rat(0)) == 2);
  CHECK(c.multiplicity(Rat(1)) == 1);
  CHECK(c.is_split());
  const auto d = split_over_rationals(P("(2s - 1)^2*(s^2 - 2)"));
  CHECK(d.multiplicity(make_rat(1, 2)) == 2);
  CHECK(d.cofactor == P("s^2 - 2"));
}

TEST_CASE("Möbius tilde examples") {
  auto [t1, c1] = mobius_tilde(P("s - 1"), Rat(0));
  CHECK(t1 == P("1 - s"));
  CHECK(c1 == -1);
  auto [t2, c2] = mobius_tilde(Poly(1), Rat(5));
  CHECK(t2 == Poly(1));
  CHECK(c2 == 1);
  auto [t3, c3] = mobius_tilde(P("s^2 - 3s + 2"), Rat(0));
  CHECK(t3 == P("2s^2 - 3s + 1"));
  CHECK(c3 == 2);
  CHECK(throws_code(ErrorCode::RootAtA, [] { mobius_tilde(P("s - 1"), Rat(1)); }));
}

TEST_CASE("Rat parsing is canonical") {
  CHECK(parse_rat("4/6") == make_rat(2, 3));
  CHECK(is_canonical(parse_rat("-10/4")));
  CHECK(format_rat(parse_rat("-10/4")) == "-5/2");
  CHECK(format_rat(Rat(7)) == "7");
  CHECK(throws_code(ErrorCode::ParseError, [] { parse_rat("1/0"); }));
  CHECK(throws_code(ErrorCode::ParseError, [] { parse_rat("x"); }));
}

TEST_CASE("property: divmod reconstructs the dividend") {
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    const Poly a = random_poly(rng, 7);
    Poly b = random_poly(rng, 4);
    if (b.is_zero()) b = Poly(1);
    auto [q, r] = poly_divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("property: gcd divides both and absorbs common divisors") {
  Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    const Poly c = random_split_poly(rng, 3);
    const Poly a = c * random_poly(rng, 3);
    const Poly b = c * random_poly(rng, 3);
    if (a.is_zero() && b.is_zero()) continue;
    const Poly g = poly_gcd(a, b);
    CHECK(g.is_monic());
    CHECK(divides(g, a));
    CHECK(divides(g, b));
    CHECK(divides(c, g));
  }
}

TEST_CASE("property: factored form expands back") {
  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    const Poly p = random_poly(rng, 6);
    if (p.is_zero()) continue;
    CHECK(split_over_rationals(p).expand() == p);
    const Poly q = Rat(uniform(rng, 1, 4)) * random_split_poly(rng, 5) * random_poly(rng, 2);
    if (q.is_zero()) continue;
    CHECK(split_over_rationals(q).expand() == q);
  }
}

TEST_CASE("property: Möbius substitution round trip") {
  Rng rng(14);
  for (int t = 0; t < 200; ++t) {
    Poly p = monic(random_poly(rng, 6));
    if (p.is_zero()) continue;
    const Rat a(uniform(rng, -3, 3));
    if (p(a) == 0) continue;
    auto [tilde, c] = mobius_tilde(p, a);
    CHECK(tilde.degree() == p.degree());
    CHECK(c == p(a));
    CHECK(tilde.coeff(0) != 0);
    CHECK(monic(mobius_untilde(tilde, a, p.degree())) == p);
  }
}

TEST_CASE("property: arithmetic results are canonical") {
  Rng rng(15);
  for (int t = 0; t < 100; ++t) {
    const Poly a = random_poly(rng, 4), b = random_poly(rng, 4);
    Poly c = a * b + monic(b);
    if (!b.is_zero()) c = c + poly_divmod(a, b).first;
    for (const auto& x : c.coeffs()) CHECK(is_canonical(x));
  }
}

TEST_CASE("rational functions reduce") {
  const RatFn x(P("s^2 - 1"), P("2s - 2"));
  CHECK(x.num() == P("1/2s + 1/2"));
  CHECK(x.den() == Poly(1));
  CHECK(x.is_polynomial());
  const RatFn y = RatFn(Poly(1), P("s")) + RatFn(Poly(1), P("s + 1"));
  CHECK(y.den() == P("s^2 + s"));
  CHECK(y.num() == P("2s + 1"));
}
