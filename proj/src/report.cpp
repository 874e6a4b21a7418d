#include "hopfcyc/report.hpp"

#include "hopfcyc/coefficients.hpp"
#include "hopfcyc/dsl.hpp"
#include "hopfcyc/instances.hpp"

#include <cstdint>
#include <cstdio>

namespace hopfcyc {

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::ordered_json verdict_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["check"] = v.check;
  j["passed"] = v.passed;
  j["samples"] = v.samples;
  if (!v.passed) {
    j["witness"] = v.witness;
    if (!v.expected.empty()) j["expected"] = v.expected;
    if (!v.computed.empty()) j["computed"] = v.computed;
    if (!v.difference.empty()) j["difference"] = v.difference;
    if (!v.difference_pretty.empty()) j["difference_pretty"] = v.difference_pretty;
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

nlohmann::ordered_json report_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["subject"] = r.subject;
  j["passed"] = r.passed();
  j["verdicts"] = nlohmann::ordered_json::array();
  for (const auto& v : r.verdicts) j["verdicts"].push_back(verdict_json(v));
  return j;
}

nlohmann::ordered_json report_header(const std::string& command, const std::string& input_text) {
  nlohmann::ordered_json j;
  j["tool"] = "hopfcyc";
  j["version"] = kToolVersion;
  j["command"] = command;
  j["input_hash"] = fnv1a_hex(input_text);
  return j;
}

nlohmann::ordered_json formula_row_json(const FormulaRow& r) {
  nlohmann::ordered_json j;
  j["formula"] = r.label + " = " + r.display;
  j["expected"] = r.expected.str(true);
  j["computed"] = r.computed.str(true);
  j["computed_canonical"] = r.computed.str(false);
  const bool match = r.expected == r.computed;
  j["match"] = match;
  if (!match) j["difference"] = (r.computed - r.expected).str(true);
  return j;
}

nlohmann::ordered_json tensor_witness_json(const TensorWitness& w) {
  nlohmann::ordered_json j;
  j["witness"] = w.witness;
  j["twisted_side"] = w.twisted.str(true);
  j["twisted_side_canonical"] = w.twisted.str(false);
  j["plain_side"] = w.plain.str(true);
  const TensorElt diff = w.twisted - w.plain;
  j["difference"] = diff.str(true);
  j["difference_canonical"] = diff.str(false);
  j["expected_twisted_side"] = w.expected_twisted.str(true);
  j["expected_difference"] = w.expected_difference.str(true);
  j["match"] = w.twisted == w.expected_twisted && diff == w.expected_difference;
  return j;
}

namespace {

void check_row(CheckReport& rep, const FormulaRow& r, const std::string& name) {
  Verdict v(name);
  v.sample();
  if (!(r.expected == r.computed)) {
    const AlgElt d = r.computed - r.expected;
    v.fail(r.label, r.expected.str(true), r.computed.str(true), d.str(), d.str(true));
  }
  rep.add(v);
}

void check_witness(CheckReport& rep, const TensorWitness& w, const std::string& name) {
  Verdict side(name + ": twisted side"), diff(name + ": difference"), fails(name + ": condition fails");
  side.sample();
  diff.sample();
  fails.sample();
  if (!(w.twisted == w.expected_twisted)) {
    const TensorElt d = w.twisted - w.expected_twisted;
    side.fail(w.witness, w.expected_twisted.str(true), w.twisted.str(true), d.str(), d.str(true));
  }
  const TensorElt d = w.twisted - w.plain;
  if (!(d == w.expected_difference)) {
    const TensorElt dd = d - w.expected_difference;
    diff.fail(w.witness, w.expected_difference.str(true), d.str(true), dd.str(), dd.str(true));
  }
  if (d.is_zero()) fails.fail(w.witness, "nonzero difference", "0");
  rep.add(side);
  rep.add(diff);
  rep.add(fails);
}

}  // namespace

PaperReproduction reproduce_paper_examples(int degree) {
  const Builtins& b = builtins();
  PaperReproduction out;
  out.report.subject = "reproduce-paper";

  // Antipode and its square on H1cop.
  const HopfPtr& H = b.h1cop;
  const AlgebraPtr& HA = H->algebra();
  const AlgElt X = AlgElt::gen(HA, "X"), Y = AlgElt::gen(HA, "Y");
  auto d = [&](int k) { return AlgElt::gen(HA, "d", k); };
  out.antipode.push_back({"S(X)", "−X + Yδ₁", -X + Y * d(1), H->antipode(X)});
  out.antipode.push_back({"S(Y)", "−Y", -Y, H->antipode(Y)});
  for (int k = 1; k <= 4; ++k) {
    const std::string dk = "δ" + subscript_digits(k);
    out.antipode.push_back({"S(" + dk + ")", "−" + dk, -d(k), H->antipode(d(k))});
  }
  out.antipode.push_back({"S²(Y)", "Y", Y, H->antipode_power(Y, 2)});
  for (int k = 1; k <= 4; ++k) {
    const std::string dk = "δ" + subscript_digits(k);
    out.antipode.push_back({"S²(" + dk + ")", dk, d(k), H->antipode_power(d(k), 2)});
  }
  out.antipode.push_back({"S²(X)", "X − δ₁", X - d(1), H->antipode_power(X, 2)});
  for (const auto& r : out.antipode) check_row(out.report, r, r.label + " = " + r.display);

  // S⁻¹ on F ▷◁ U, against the table and against δ(S(h(3)))δ(h(1))S(h(2)).
  const HopfPtr& B = b.B;
  const AlgebraPtr& BA = B->algebra();
  const AlgElt bX = AlgElt::gen(BA, "X"), bY = AlgElt::gen(BA, "Y"), b1 = B->one();
  auto bd = [&](int k) { return AlgElt::gen(BA, "d", k); };
  const AlgElt d1sq = bd(1) * bd(1);
  struct Entry {
    std::string label, display;
    AlgElt h, expected;
  };
  const std::vector<Entry> table{
      {"S⁻¹(δ₁▷◁1)", "−δ₁▷◁1", bd(1), -bd(1)},
      {"S⁻¹(δ₂▷◁1)", "−δ₂▷◁1", bd(2), -bd(2)},
      {"S⁻¹(δ₁▷◁Y)", "δ₁▷◁Y + δ₁▷◁1", bd(1) * bY, bd(1) * bY + bd(1)},
      {"S⁻¹(1▷◁Y)", "−1▷◁Y", bY, -bY},
      {"S⁻¹(1▷◁X)", "−(1▷◁X) + (δ₁▷◁Y)", bX, -bX + bd(1) * bY},
      {"S⁻¹(δ₁²▷◁Y)", "−S⁻¹(2δ₁²▷◁1) − (δ₁²▷◁Y)", d1sq * bY, -B->antipode_inverse(Rational(2) * d1sq) - d1sq * bY},
      {"S⁻¹(δ₁▷◁X)", "(δ₁▷◁X) − (δ₂▷◁1) − (δ₁²▷◁Y)", bd(1) * bX, bd(1) * bX - bd(2) - d1sq * bY},
  };
  // δ(Y) = 1, δ vanishes on X and the δ_k.
  const Character delta{"δ", [](const Generator& g) { return g.name == "Y" ? Rational(1) : Rational(0); }};
  for (const auto& e : table) {
    const AlgElt sinv = B->antipode_inverse(e.h);
    out.antipode_inverse.push_back({e.label, e.display, e.expected, sinv});
    AlgElt via = AlgElt::zero(BA);
    for (const auto& [legs, c] : B->sweedler(e.h, 3).terms())
      via += c * delta(B->antipode(B->elt(legs[2]))) * delta(legs[0]) * B->antipode(B->elt(legs[1]));
    out.inverse_formula.push_back({e.label, "δ(S(h(3)))δ(h(1))S(h(2))", sinv, via});
  }
  for (const auto& r : out.antipode_inverse) check_row(out.report, r, r.label + " = " + r.display);
  for (const auto& r : out.inverse_formula) check_row(out.report, r, r.label + " = " + r.display);

  // M = F ▷◁ U with right multiplication and trivial coaction, m = 1▷◁1, h = δ₁▷◁X.
  const ModuleComodulePtr M = regular_right_module(B);
  const Word h{Generator("d", 1), Generator("X")};
  const AlgebraPtr& UA = b.U_module->V;
  const AlgElt uX = AlgElt::gen(UA, "X"), uY = AlgElt::gen(UA, "Y");
  {
    const auto [plain, twisted] = ch_ayd_sides(*M, *b.U_module, Word{}, h, Word{Generator("X")});
    out.ch_counterexample = {"C = U, h = δ₁▷◁X, c = X, m = 1▷◁1", plain, twisted,
                             tensor(uX, bd(1) * bX) + tensor(uY * uX, d1sq), tensor(uY * uX, d1sq)};
  }
  {
    const AlgebraPtr& FA = b.F_module->V;
    const AlgElt f1 = AlgElt::gen(FA, "d", 1);
    const auto [plain, twisted] = ah_ayd_sides(*M, *b.F_module, Word{}, h, Word{Generator("d", 1)});
    out.ah_counterexample = {"A = F, h = δ₁▷◁X, a = δ₁, m = 1▷◁1", plain, twisted,
                             tensor(f1, bd(1) * bX) - tensor(f1, d1sq), -tensor(f1, d1sq)};
  }
  check_witness(out.report, out.ch_counterexample, "_CH-AYD");
  check_witness(out.report, out.ah_counterexample, "_AH-AYD");

  // C = F ▷◁ U acting on itself with (ε, 1): D = C/I ≅ U.
  const ModularPair eps{counit_character(B), B->one()};
  const CoidealQuotient q = build_coideal_quotient(regular_module_coalgebra(B), eps);
  out.report.append(q.report, "coideal: ");

  if (degree > 0) {
    for (const HopfPtr& A : {b.h1cop, b.F, b.U, b.B}) out.report.append(verify_hopf_axioms(*A, degree), A->name() + ": ");
    out.report.append(check_matched_pair(*b.pair, std::min(degree, 2)), "matched pair: ");
  }

  std::string input = print_hopf_spec(h1cop_spec()) + print_hopf_spec(u_spec());
  auto& j = out.json;
  j = report_header("reproduce-paper", input);
  j["passed"] = out.report.passed();
  auto rows = [](const std::vector<FormulaRow>& v) {
    auto a = nlohmann::ordered_json::array();
    for (const auto& r : v) a.push_back(formula_row_json(r));
    return a;
  };
  j["antipode_table"] = rows(out.antipode);
  j["antipode_inverse_table"] = rows(out.antipode_inverse);
  j["antipode_inverse_formula"] = rows(out.inverse_formula);
  j["ch_ayd_counterexample"] = tensor_witness_json(out.ch_counterexample);
  j["ah_ayd_counterexample"] = tensor_witness_json(out.ah_counterexample);
  j["report"] = report_json(out.report);
  return out;
}

}  // namespace hopfcyc
