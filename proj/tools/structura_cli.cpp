// structura: structural analysis and synthesis of polynomial and rational matrices.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "structura/error.hpp"
#include "structura/json_io.hpp"
#include "structura/realize.hpp"

using namespace structura;

namespace {

enum Exit { ok = 0, negative = 1, malformed = 2, not_split = 3, exhausted = 4 };

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_json_file(out_path, j);
  }
}

// Construct reports wrap the matrix under "matrix"; analyze and verify accept both.
json matrix_payload(const json& j) { return j.is_object() && j.contains("matrix") ? j.at("matrix") : j; }

int run_analyze(const std::string& in, const std::string& out) {
  const MatrixInput m = matrix_from_json(matrix_payload(read_json_file(in)));
  if (m.rational) {
    emit(structure_to_json(extract_rational_structure(m.rat)), out);
  } else {
    emit(structure_to_json(extract_poly_structure(m.poly)), out);
  }
  return ok;
}

int run_check(const std::string& in, const std::string& out) {
  const Prescription p = prescription_from_json(read_json_file(in));
  const FeasibilityReport rep = check_feasibility(p);
  emit(report_to_json(rep, p), out);
  return rep.feasible ? ok : negative;
}

int run_construct(const std::string& in, const std::string& out, std::uint64_t seed, bool no_verify) {
  const Prescription p = prescription_from_json(read_json_file(in));
  const FeasibilityReport rep = check_feasibility(p);
  if (!rep.feasible) {
    std::cout << report_to_json(rep, p).dump(2) << "\n";
    std::cerr << "structura: prescription is infeasible; nothing constructed\n";
    return negative;
  }
  SynthOptions opt = SynthOptions::from_env();
  opt.seed = seed;
  Realization res;
  try {
    res = construct(p, opt);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::FieldNotSplit) {
      std::cerr << "structura: " << e.what()
                << "\nThe conditions are sufficient only over an algebraically closed field; over Q the construction "
                   "needs every invariant factor to split into linear factors.\n";
      return not_split;
    }
    if (e.code() == ErrorCode::SearchExhausted || e.code() == ErrorCode::CompletionSearchExhausted) {
      std::cerr << "structura: " << e.what() << "\n";
      return exhausted;
    }
    throw;
  }
  const json matrix = res.rational ? matrix_to_json(res.rat) : matrix_to_json(res.poly);
  json report = {{"tool", tool_version()}, {"variant", variant_name(p.variant)}};
  if (!no_verify) {
    const VerifyReport v = res.rational ? verify(res.rat, p) : verify(res.poly, p);
    report["verification"] = verify_to_json(v);
    if (!v.pass) {
      report["matrix"] = matrix;
      std::cout << report.dump(2) << "\n";
      std::cerr << "structura: construction failed verification\n";
      return malformed;
    }
  }
  if (out.empty()) {
    report["matrix"] = matrix;
  } else {
    write_json_file(out, matrix);
    report["matrix_file"] = out;
  }
  std::cout << report.dump(2) << "\n";
  return ok;
}

int run_verify(const std::string& matrix_path, const std::string& prescription_path) {
  const MatrixInput m = matrix_from_json(matrix_payload(read_json_file(matrix_path)));
  const Prescription p = prescription_from_json(read_json_file(prescription_path));
  const VerifyReport v = m.rational ? verify(m.rat, p) : verify(m.poly, p);
  std::cout << verify_to_json(v).dump(2) << "\n";
  return v.pass ? ok : negative;
}

IndexTuple parse_tuple(const std::string& text) {
  IndexTuple out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad index list '" + text + "'");
    }
  }
  return out;
}

int run_minor_select(const std::string& in, const std::string& z_text, bool brute) {
  const PolyMatrix e = poly_matrix_from_json(matrix_payload(read_json_file(in)));
  const IndexTuple z = parse_tuple(z_text);
  const MinorSelection sel = select_nonzero_minor(e, z);
  json out = {{"tool", tool_version()}, {"Z", z}, {"Z_star", star(z, e.rows())}};
  out.update(selection_to_json(sel));
  if (brute) {
    json all = json::array();
    bool found = false;
    for (const auto& pair : admissible_pairs(e, z)) {
      all.push_back(selection_to_json(pair));
      found = found || (pair.I == sel.I && pair.J == sel.J);
    }
    out["admissible_pairs"] = all;
    out["selection_in_admissible_set"] = found;
  }
  std::cout << out.dump(2) << "\n";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structural data of polynomial and rational matrices: extraction, feasibility and synthesis"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  std::string in, out, second, z_text;
  std::uint64_t seed = 0;
  bool no_verify = false, brute = false;

  auto* analyze = app.add_subcommand("analyze", "Extract the complete structural data of a matrix");
  analyze->add_option("input", in, "Matrix JSON file")->required();
  analyze->add_option("-o,--output", out, "Write the report here instead of stdout");

  auto* check = app.add_subcommand("check", "Decide feasibility of a prescription (exit 0 feasible, 1 infeasible)");
  check->add_option("input", in, "Prescription JSON file")->required();
  check->add_option("-o,--output", out, "Write the report here instead of stdout");

  auto* construct_cmd = app.add_subcommand("construct", "Build a matrix realizing a prescription");
  construct_cmd->add_option("input", in, "Prescription JSON file")->required();
  construct_cmd->add_option("-o,--output", out, "Write the matrix here");
  construct_cmd->add_option("--seed", seed, "Tie-break seed for the distribution search");
  construct_cmd->add_flag("--no-verify", no_verify, "Skip re-extraction of the result");

  auto* verify_cmd = app.add_subcommand("verify", "Compare a matrix against a prescription");
  verify_cmd->add_option("matrix", in, "Matrix JSON file")->required();
  verify_cmd->add_option("prescription", second, "Prescription JSON file")->required();

  auto* minor = app.add_subcommand("minor-select", "Nonzero minor E(I,J) with J <= Z and I <= Z*");
  minor->add_option("input", in, "Square matrix JSON file")->required();
  minor->add_option("--z", z_text, "Comma-separated indices, e.g. 1,3,4")->required();
  minor->add_flag("--brute", brute, "Also list every admissible pair");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : malformed;
  }

  try {
    if (*analyze) return run_analyze(in, out);
    if (*check) return run_check(in, out);
    if (*construct_cmd) return run_construct(in, out, seed, no_verify);
    if (*verify_cmd) return run_verify(in, second);
    if (*minor) return run_minor_select(in, z_text, brute);
  } catch (const Error& e) {
    std::cerr << "structura: " << e.what() << "\n";
    return malformed;
  } catch (const std::exception& e) {
    std::cerr << "structura: " << e.what() << "\n";
    return malformed;
  }
  return malformed;
}
