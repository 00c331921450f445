#pragma once

// Small helpers shared by the unit tests.

#include <initializer_list>
#include <string>

#include "structura/error.hpp"
#include "structura/json_io.hpp"

namespace structura::testing {

inline Poly P(const std::string& text) { return parse_poly(text); }

/// Matrix from rows of polynomial text.
inline PolyMatrix M(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<Poly>> out;
  for (const auto& row : rows) {
    std::vector<Poly> r;
    for (const char* e : row) r.push_back(parse_poly(e));
    out.push_back(std::move(r));
  }
  return PolyMatrix::from_rows(out);
}

template <class Fn>
bool throws_code(ErrorCode code, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace structura::testing
