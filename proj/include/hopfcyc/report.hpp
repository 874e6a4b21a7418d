#pragma once

#include "hopfcyc/algebra.hpp"
#include "hopfcyc/verdict.hpp"

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace hopfcyc {

inline constexpr const char* kToolVersion = "0.1.0";

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

nlohmann::ordered_json verdict_json(const Verdict& v);
nlohmann::ordered_json report_json(const CheckReport& r);

/// Common header of every report: tool, version, command, input hash.
nlohmann::ordered_json report_header(const std::string& command, const std::string& input_text);

/// One row of a displayed formula table.
struct FormulaRow {
  std::string label;     // e.g. "S(X)"
  std::string display;   // the formula as displayed, e.g. "−X + Yδ₁"
  AlgElt expected;       // the displayed formula evaluated in the algebra
  AlgElt computed;
};
nlohmann::ordered_json formula_row_json(const FormulaRow& r);

/// Both sides of a failed compatibility condition at one witness.
struct TensorWitness {
  std::string witness;
  TensorElt plain;          // the side without the twist, e.g. c ⊗ m h
  TensorElt twisted;        // the side the condition rewrites
  TensorElt expected_twisted;
  TensorElt expected_difference;  // twisted - plain
};
nlohmann::ordered_json tensor_witness_json(const TensorWitness& w);

struct PaperReproduction {
  CheckReport report;
  std::vector<FormulaRow> antipode;          // S and S² on H1cop generators
  std::vector<FormulaRow> antipode_inverse;  // S⁻¹ on F ▷◁ U
  std::vector<FormulaRow> inverse_formula;   // δ(S(h(3)))δ(h(1))S(h(2)) on the same elements
  TensorWitness ch_counterexample;
  TensorWitness ah_counterexample;
  nlohmann::ordered_json json;
};

/// Antipode tables of H1cop and F ▷◁ U, the two non-AYD witnesses, the
/// coideal quotient D ≅ U and the Hopf and matched-pair axioms up to `degree`.
PaperReproduction reproduce_paper_examples(int degree = 3);

}  // namespace hopfcyc
