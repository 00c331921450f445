#include "structura/json_io.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "structura/error.hpp"

namespace structura {

const char* tool_version() { return "structura 1.0.0"; }

// ---------------------------------------------------------------- polynomial text

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : t_(text) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != t_.size()) fail("unexpected '" + std::string(1, t_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, "polynomial '" + t_ + "': " + why);
  }

  void skip() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < t_.size() && t_[pos_] == c;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= t_.size()) return false;
    const char c = t_[pos_];
    return c == 's' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  Poly expr() {
    Poly acc;
    bool negate = false;
    if (peek('-')) {
      negate = true;
      ++pos_;
    } else if (peek('+')) {
      ++pos_;
    }
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  // Products and constant divisions, left to right; juxtaposition multiplies.
  Poly term() {
    Poly acc = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * power();
      } else if (peek('/')) {
        ++pos_;
        const Poly d = power();
        if (d.is_zero() || !d.is_constant()) fail("division by a non-constant or zero");
        acc = acc * (Rat(1) / d.coeff(0));
      } else if (starts_factor()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Poly power() {
    Poly base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      const size_t start = pos_;
      while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent expected");
      base = pow(base, std::stoi(t_.substr(start, pos_ - start)));
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ >= t_.size()) fail("unexpected end");
    const char c = t_[pos_];
    if (c == 's') {
      ++pos_;
      return Poly::s();
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const size_t start = pos_;
      while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
      return Poly(Rat(mpz_class(t_.substr(start, pos_ - start))));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string t_;
  size_t pos_ = 0;
};

[[noreturn]] void parse_error(const std::string& why) { throw Error(ErrorCode::ParseError, why); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(mpz_class(j.dump()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  parse_error("rational expected, got " + j.dump());
}

json ints(const std::vector<int>& v) { return json(v); }

std::vector<int> ints_from(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  if (!j.at(key).is_array()) parse_error(std::string(key) + " must be an array");
  return j.at(key).get<std::vector<int>>();
}

std::vector<Poly> polys_from(const json& j, const char* key) {
  std::vector<Poly> out;
  if (!j.contains(key)) return out;
  if (!j.at(key).is_array()) parse_error(std::string(key) + " must be an array");
  for (const auto& e : j.at(key)) out.push_back(poly_from_json(e));
  return out;
}

json polys_to_json(const std::vector<Poly>& v) {
  json out = json::array();
  for (const auto& p : v) out.push_back(poly_to_json(p));
  return out;
}

bool is_rational_entry(const json& e) { return e.is_object() && e.contains("num"); }

}  // namespace

Poly parse_poly(const std::string& text) { return PolyParser(text).parse(); }

json poly_to_json(const Poly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(format_rat(c));
  return out;
}

Poly poly_from_json(const json& j) {
  if (j.is_number_integer()) return Poly(rat_from_json(j));
  if (j.is_string()) return parse_poly(j.get<std::string>());
  if (j.is_array()) {
    std::vector<Rat> c;
    for (const auto& e : j) c.push_back(rat_from_json(e));
    return Poly(std::move(c));
  }
  if (j.is_object() && (j.contains("factors") || j.contains("roots"))) {
    // Factored form: leading · ∏ (s − root)^mult · cofactor.
    Poly out = j.contains("leading") ? Poly(rat_from_json(j.at("leading"))) : Poly(1);
    for (const auto& pair : j.contains("factors") ? j.at("factors") : j.at("roots")) {
      if (!pair.is_array() || pair.size() != 2) parse_error("roots entries are [root, multiplicity]");
      out = out * pow(Poly::linear(rat_from_json(pair[0])), pair[1].get<int>());
    }
    if (j.contains("cofactor")) out = out * poly_from_json(j.at("cofactor"));
    return out;
  }
  parse_error("polynomial expected, got " + j.dump());
}

// ---------------------------------------------------------------- matrices

json matrix_to_json(const PolyMatrix& a) {
  json rows = json::array();
  for (int i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < a.cols(); ++j) row.push_back(poly_to_json(a(i, j)));
    rows.push_back(row);
  }
  return {{"m", a.rows()}, {"n", a.cols()}, {"entries", rows}};
}

json matrix_to_json(const RationalMatrix& a) {
  json rows = json::array();
  for (int i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < a.cols(); ++j)
      row.push_back({{"num", poly_to_json(a(i, j).num())}, {"den", poly_to_json(a(i, j).den())}});
    rows.push_back(row);
  }
  return {{"rational", true}, {"m", a.rows()}, {"n", a.cols()}, {"entries", rows}};
}

MatrixInput matrix_from_json(const json& j) {
  try {
    const json& entries = j.is_array() ? j : j.at("entries");
    if (!entries.is_array()) parse_error("entries must be an array");
    // Shape fields: "m"/"n" or "rows"/"cols".
    auto shape = [&](const char* a, const char* b) -> int {
      if (!j.is_object()) return -1;
      if (j.contains(a)) return j.at(a).get<int>();
      if (j.contains(b)) return j.at(b).get<int>();
      return -1;
    };
    const int want_rows = shape("m", "rows"), want_cols = shape("n", "cols");
    std::vector<json> flat;
    int rows = 0, cols = 0;
    // Nested rows unless the entry count matches m*n with entries that are not
    // rows of the expected width.
    bool nested = !entries.empty() && entries.front().is_array();
    if (nested && want_rows >= 0 && want_cols >= 0) {
      nested = static_cast<int>(entries.size()) == want_rows;
      for (const auto& row : entries) nested = nested && row.is_array() && static_cast<int>(row.size()) == want_cols;
    }
    if (nested) {
      rows = static_cast<int>(entries.size());
      cols = static_cast<int>(entries.front().size());
      for (const auto& row : entries) {
        if (!row.is_array() || static_cast<int>(row.size()) != cols) parse_error("ragged matrix rows");
        for (const auto& e : row) flat.push_back(e);
      }
      if (want_rows >= 0 && want_rows != rows) parse_error("row count differs from m");
      if (want_cols >= 0 && want_cols != cols) parse_error("column count differs from n");
    } else {
      if (want_rows < 0 || want_cols < 0) parse_error("flat entries need m and n");
      rows = want_rows;
      cols = want_cols;
      if (static_cast<int>(entries.size()) != rows * cols) parse_error("entry count differs from m*n");
      flat.assign(entries.begin(), entries.end());
    }
    MatrixInput out;
    out.rational = (j.is_object() && j.value("rational", false)) ||
                   std::any_of(flat.begin(), flat.end(), is_rational_entry);
    if (out.rational) {
      out.rat = RationalMatrix(rows, cols);
      for (int t = 0; t < static_cast<int>(flat.size()); ++t) {
        const json& e = flat[t];
        Poly num = is_rational_entry(e) ? poly_from_json(e.at("num")) : poly_from_json(e);
        Poly den = is_rational_entry(e) && e.contains("den") ? poly_from_json(e.at("den")) : Poly(1);
        if (den.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "zero denominator");
        out.rat(t / cols, t % cols) = RatFn(num, den);
      }
    } else {
      out.poly = PolyMatrix(rows, cols);
      for (int t = 0; t < static_cast<int>(flat.size()); ++t) out.poly(t / cols, t % cols) = poly_from_json(flat[t]);
    }
    return out;
  } catch (const json::exception& e) {
    parse_error(std::string("matrix: ") + e.what());
  }
}

PolyMatrix poly_matrix_from_json(const json& j) {
  MatrixInput in = matrix_from_json(j);
  if (in.rational) {
    if (!in.rat.is_polynomial()) parse_error("polynomial matrix expected");
    PolyMatrix out(in.rat.rows(), in.rat.cols());
    for (int i = 0; i < out.rows(); ++i)
      for (int k = 0; k < out.cols(); ++k) out(i, k) = in.rat(i, k).num();
    return out;
  }
  return in.poly;
}

// ---------------------------------------------------------------- prescriptions

Prescription prescription_from_json(const json& j) {
  try {
    if (!j.is_object()) parse_error("prescription must be an object");
    Prescription p;
    p.variant = parse_variant(j.at("variant").get<std::string>());
    p.m = j.at("m").get<int>();
    p.n = j.at("n").get<int>();
    p.r = j.at("r").get<int>();
    p.d = j.value("d", 0);
    p.alpha = polys_from(j, "alpha");
    p.f = ints_from(j, "f");
    p.eps = polys_from(j, "eps");
    p.psi = polys_from(j, "psi");
    p.q = ints_from(j, "q");
    p.k = ints_from(j, "k");
    p.l = ints_from(j, "l");
    p.right = ints_from(j, "right");
    p.left = ints_from(j, "left");
    if (j.contains("K")) p.K = poly_matrix_from_json(j.at("K"));
    if (j.contains("Lt")) p.Lt = poly_matrix_from_json(j.at("Lt"));
    return p;
  } catch (const json::exception& e) {
    parse_error(std::string("prescription: ") + e.what());
  }
}

json prescription_to_json(const Prescription& p) {
  json out = {{"variant", variant_name(p.variant)}, {"m", p.m}, {"n", p.n}, {"r", p.r}};
  if (is_rational(p.variant)) {
    out["eps"] = polys_to_json(p.eps);
    out["psi"] = polys_to_json(p.psi);
    out["q"] = ints(p.q);
  } else {
    out["d"] = p.d;
    out["alpha"] = polys_to_json(p.alpha);
    out["f"] = ints(p.f);
  }
  if (p.K) out["K"] = matrix_to_json(*p.K);
  if (p.Lt) out["Lt"] = matrix_to_json(*p.Lt);
  if (!p.K && p.variant != Variant::EIG_eigenstructure) {
    out["k"] = ints(p.k);
    out["l"] = ints(p.l);
  }
  if (p.variant == Variant::P3_full || p.variant == Variant::R3_full || p.variant == Variant::EIG_eigenstructure) {
    out["right"] = ints(p.right);
    out["left"] = ints(p.left);
  }
  return out;
}

// ---------------------------------------------------------------- reports

json report_to_json(const FeasibilityReport& rep, const Prescription& p) {
  json conds = json::object();
  for (const auto& [name, c] : rep.conditions) {
    json e = {{"verdict", verdict_name(c.verdict)}};
    if (!c.lhs.empty() || !c.rhs.empty()) {
      e["lhs"] = ints(c.lhs);
      e["rhs"] = ints(c.rhs);
      e["lhs_partial_sums"] = ints(c.lhs_partial);
      e["rhs_partial_sums"] = ints(c.rhs_partial);
    }
    if (!c.detail.empty()) e["detail"] = c.detail;
    conds[name] = e;
  }
  json out = {{"tool", tool_version()},
              {"variant", variant_name(p.variant)},
              {"feasible", rep.feasible},
              {"g_sequence", ints(rep.g_sequence)},
              {"conditions", conds}};
  if (p.K) out["k"] = ints(effective_k(p));
  if (p.Lt) out["l"] = ints(effective_l(p));
  return out;
}

namespace {

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

json identity(bool ok, int lhs, int rhs) { return {{"verdict", ok ? "pass" : "fail"}, {"lhs", lhs}, {"rhs", rhs}}; }

// Rational eigenvalues with their partial multiplicities, plus the part of
// each invariant factor without rational roots.
json spectrum(const std::vector<Poly>& alpha) {
  json eig = json::array();
  json rest = json::array();
  if (alpha.empty()) return {{"eigenvalues", eig}, {"irrational_part", rest}};
  const FactoredPoly top = split_over_rationals(alpha.back());
  for (const auto& [root, unused] : top.linear_factors) {
    std::vector<int> mult;
    for (const auto& a : alpha) mult.push_back(root_multiplicity(a, root));
    eig.push_back({{"lambda", format_rat(root)}, {"partial_multiplicities", mult}});
  }
  for (const auto& a : alpha) rest.push_back(poly_to_json(split_over_rationals(a).cofactor));
  return {{"eigenvalues", eig}, {"irrational_part", rest}};
}

json subspaces(const PolyStructuralData& s) {
  return {{"k", ints(s.k)},
          {"l", ints(s.l)},
          {"right", ints(s.right)},
          {"left", ints(s.left)},
          {"colspan_basis", matrix_to_json(s.colspan_basis)},
          {"rowspan_basis", matrix_to_json(s.rowspan_basis)},
          {"right_null_basis", matrix_to_json(s.right_null_basis)},
          {"left_null_basis", matrix_to_json(s.left_null_basis)}};
}

}  // namespace

json structure_to_json(const PolyStructuralData& s) {
  int sum_alpha = 0;
  for (const auto& a : s.alpha) sum_alpha += a.degree();
  const int rd = s.r * s.d;
  const int ist = sum(s.right) + sum(s.left) + sum(s.f) + sum_alpha;
  const int klfa = sum(s.k) + sum(s.l) + sum(s.f) + sum_alpha;
  json out = {{"tool", tool_version()}, {"kind", "polynomial"}, {"m", s.m}, {"n", s.n}, {"r", s.r}, {"d", s.d}};
  out["alpha"] = polys_to_json(s.alpha);
  out["f"] = ints(s.f);
  out["q"] = ints(s.q);
  out.update(subspaces(s));
  out.update(spectrum(s.alpha));
  out["identities"] = {
      {"eqf1", identity(!s.f.empty() && s.f.front() == 0, s.f.empty() ? -1 : s.f.front(), 0)},
      {"eqIST", identity(ist == rd, ist, rd)},
      {"eqsumklfa", identity(klfa == rd, klfa, rd)},
      {"eqsums",
       {{"verdict", sum(s.left) == sum(s.k) && sum(s.right) == sum(s.l) ? "pass" : "fail"},
        {"sum_left", sum(s.left)},
        {"sum_k", sum(s.k)},
        {"sum_right", sum(s.right)},
        {"sum_l", sum(s.l)}}}};
  return out;
}

json structure_to_json(const RatStructuralData& s) {
  int total = sum(s.k) + sum(s.l) + sum(s.q);
  for (int i = 0; i < s.r; ++i) total += s.eps[i].degree() - s.psi[i].degree();
  json out = {{"tool", tool_version()}, {"kind", "rational"}, {"m", s.m}, {"n", s.n}, {"r", s.r}};
  out["psi1"] = poly_to_json(s.psi1);
  out["eps"] = polys_to_json(s.eps);
  out["psi"] = polys_to_json(s.psi);
  out["q"] = ints(s.q);
  out.update(subspaces(s.cleared));
  json zeros = spectrum(s.eps), poles = spectrum(s.psi);
  out["zeros"] = zeros["eigenvalues"];
  out["poles"] = poles["eigenvalues"];
  out["identities"] = {
      {"eqsums",
       {{"verdict", sum(s.left) == sum(s.k) && sum(s.right) == sum(s.l) ? "pass" : "fail"},
        {"sum_left", sum(s.left)},
        {"sum_k", sum(s.k)},
        {"sum_right", sum(s.right)},
        {"sum_l", sum(s.l)}}},
      {"rational_index_sum", identity(total == 0, total, 0)}};
  out["cleared"] = structure_to_json(s.cleared);
  return out;
}

json verify_to_json(const VerifyReport& rep) {
  return {{"tool", tool_version()}, {"verify", rep.pass ? "pass" : "fail"}, {"mismatches", rep.mismatches}};
}

json selection_to_json(const MinorSelection& sel) {
  return {{"I", sel.I}, {"J", sel.J}, {"minor", poly_to_json(sel.minor)}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    parse_error(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace structura
