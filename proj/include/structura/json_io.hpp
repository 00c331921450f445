#pragma once

#include <string>

#include <json.hpp>

#include "structura/feasibility.hpp"
#include "structura/minor_select.hpp"
#include "structura/structure.hpp"
#include "structura/verify.hpp"

namespace structura {

using json = nlohmann::json;

const char* tool_version();

/// Parses text such as "s^2 - 3s + 2", "(s-1)^2*(s+1)" or "3/2s^2 - 1".
Poly parse_poly(const std::string& text);

/// Polynomials are written as ascending coefficient arrays of "p/q" strings.
/// Input also accepts integers, polynomial text and the factored form
/// {leading, factors: [[root, mult], …], cofactor}.
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

json matrix_to_json(const PolyMatrix& a);
json matrix_to_json(const RationalMatrix& a);

struct MatrixInput {
  bool rational = false;
  PolyMatrix poly;
  RationalMatrix rat;
};

/// {"m", "n", "entries"} with nested or flat entries, or a bare nested
/// array. Any {num, den} entry makes the matrix rational.
MatrixInput matrix_from_json(const json& j);
PolyMatrix poly_matrix_from_json(const json& j);

Prescription prescription_from_json(const json& j);
json prescription_to_json(const Prescription& p);

json report_to_json(const FeasibilityReport& rep, const Prescription& p);
json structure_to_json(const PolyStructuralData& s);
json structure_to_json(const RatStructuralData& s);
json verify_to_json(const VerifyReport& rep);
json selection_to_json(const MinorSelection& sel);

/// Throws Error(ParseError) on unreadable files or invalid JSON.
json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace structura
