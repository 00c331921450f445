#include <doctest.h>

#include "structura/json_io.hpp"
#include "structura/realize.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"

using namespace structura;
using namespace structura::testing;

TEST_CASE("polynomial text parsing") {
  CHECK(parse_poly("s^2 - 3s + 2") == Poly(std::vector<Rat>{2, -3, 1}));
  CHECK(parse_poly("(s-1)^2*(s+1)") == Poly(std::vector<Rat>{1, -1, -1, 1}));
  CHECK(parse_poly("3/2s^2 - 1") == Poly(std::vector<Rat>{-1, 0, make_rat(3, 2)}));
  CHECK(parse_poly("s(s-1)") == Poly(std::vector<Rat>{0, -1, 1}));
  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly("-(s)") == Poly(std::vector<Rat>{0, -1}));
  CHECK(throws_code(ErrorCode::ParseError, [] { parse_poly("s^"); }));
  CHECK(throws_code(ErrorCode::ParseError, [] { parse_poly("x + 1"); }));
  CHECK(throws_code(ErrorCode::ParseError, [] { parse_poly("(s + 1"); }));
}

TEST_CASE("polynomial encodings") {
  const Poly p = P("3/2s^2 - 1");
  CHECK(poly_to_json(p) == json::array({"-1", "0", "3/2"}));
  CHECK(poly_from_json(poly_to_json(p)) == p);
  CHECK(poly_to_json(Poly()) == json::array());
  CHECK(poly_from_json(json(4)) == Poly(4));
  CHECK(poly_from_json(json::array({1, "1/2"})) == P("1 + 1/2s"));
  const json factored = json::parse(R"({"leading": "2", "factors": [["1", 2], ["-1/2", 1]], "cofactor": ["1", "0", "1"]})");
  CHECK(poly_from_json(factored) == P("2(s-1)^2(s+1/2)(s^2+1)"));
  CHECK(throws_code(ErrorCode::ParseError, [] { poly_from_json(json::array({"1/0"})); }));
  CHECK(throws_code(ErrorCode::ParseError, [] { poly_from_json(json(true)); }));
}

TEST_CASE("matrix encodings round trip") {
  Rng rng(91);
  for (int t = 0; t < 20; ++t) {
    const PolyMatrix a = random_matrix(rng, uniform(rng, 1, 3), uniform(rng, 1, 3), 3);
    const json j = matrix_to_json(a);
    CHECK(j.at("m") == a.rows());
    CHECK(j.at("n") == a.cols());
    CHECK(poly_matrix_from_json(j) == a);
    const RationalMatrix r = random_rational_matrix(rng, 2, 2, 2);
    const MatrixInput in = matrix_from_json(matrix_to_json(r));
    CHECK(in.rational);
    CHECK(in.rat == r);
  }
  const json flat = {{"m", 2}, {"n", 2}, {"entries", {"s", 1, 0, "s"}}};
  CHECK(poly_matrix_from_json(flat) == M({{"s", "1"}, {"0", "s"}}));
  const json nested_text = json::array({json::array({"s", "1"}), json::array({"0", "s"})});
  CHECK(poly_matrix_from_json(nested_text) == M({{"s", "1"}, {"0", "s"}}));
  const json rat = {{"m", 1}, {"n", 1}, {"entries", {{{{"num", {"1"}}, {"den", {"0", "1"}}}}}}};
  const MatrixInput ri = matrix_from_json(rat);
  REQUIRE(ri.rational);
  CHECK(ri.rat(0, 0) == RatFn(Poly(1), P("s")));
  CHECK(throws_code(ErrorCode::ParseError, [] {
    poly_matrix_from_json(json{{"m", 2}, {"n", 2}, {"entries", {"s", 1, 0}}});
  }));
  CHECK(throws_code(ErrorCode::ParseError, [] { poly_matrix_from_json(json::array({{1, 2}, {3}})); }));
}

TEST_CASE("prescription round trip") {
  Rng rng(92);
  for (Variant v : {Variant::P1_spans, Variant::P2_span_indices, Variant::P3_full}) {
    const Prescription p = random_feasible_prescription(rng, v);
    const Prescription back = prescription_from_json(prescription_to_json(p));
    CHECK(back.variant == p.variant);
    CHECK(back.m == p.m);
    CHECK(back.r == p.r);
    CHECK(back.d == p.d);
    CHECK(back.alpha == p.alpha);
    CHECK(back.f == p.f);
    CHECK(effective_k(back) == effective_k(p));
    CHECK(back.right == p.right);
    CHECK(back.K.has_value() == p.K.has_value());
  }
  const json text = json::parse(R"({"variant": "P2_span_indices", "m": 3, "n": 3, "r": 2, "d": 7,
      "alpha": ["1", "(s^2+1)^2"], "f": [0, 0], "k": [5, 0], "l": [4, 1]})");
  const Prescription p = prescription_from_json(text);
  CHECK(p.alpha[1] == P("s^4 + 2s^2 + 1"));
  CHECK(throws_code(ErrorCode::MalformedPrescription, [] { prescription_from_json(json{{"variant", "P9"}}); }));
}

TEST_CASE("reports carry the condition labels") {
  const json text = json::parse(R"({"variant": "P2_span_indices", "m": 3, "n": 3, "r": 2, "d": 6,
      "alpha": ["1", "(s^2+1)^2"], "f": [0, 0], "k": [5, 0], "l": [4, 1]})");
  const Prescription p = prescription_from_json(text);
  const json rep = report_to_json(check_feasibility(p), p);
  CHECK(rep.at("feasible") == false);
  for (const char* key : {"eqf1", "eqprec", "eqx0", "eqy0"}) CHECK(rep.at("conditions").contains(key));
  CHECK(rep.at("conditions").at("eqprec").at("verdict") == "fail");

  const json s = structure_to_json(extract_poly_structure(M({{"s", "1"}, {"0", "s"}})));
  CHECK(s.at("alpha") == json::array({json::array({"1"}), json::array({"0", "0", "1"})}));
  CHECK(s.at("identities").at("eqIST").at("verdict") == "pass");
  CHECK(s.at("identities").at("eqsums").at("verdict") == "pass");
}
