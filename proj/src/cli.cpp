#include "hopfcyc/cli.hpp"

#include "hopfcyc/cocyclic.hpp"
#include "hopfcyc/coefficients.hpp"
#include "hopfcyc/cup.hpp"
#include "hopfcyc/dsl.hpp"
#include "hopfcyc/errors.hpp"
#include "hopfcyc/instances.hpp"
#include "hopfcyc/kaygun.hpp"
#include "hopfcyc/report.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace hopfcyc {

namespace {

using json = nlohmann::ordered_json;

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) io_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  const RunOptions& opts;
  std::string command;
  std::string input;  // hashed into the report header
  std::vector<CheckReport> reports;
  json extra = json::object();

  int degree(int fallback) const { return opts.degree >= 0 ? opts.degree : fallback; }
  int upto(int fallback) const { return opts.upto >= 0 ? opts.upto : fallback; }

  RunResult finish() {
    RunResult r;
    r.passed = true;
    for (const auto& rep : reports) r.passed = r.passed && rep.passed();
    r.report = report_header(command, input);
    r.report["options"] = options_json();
    r.report["passed"] = r.passed;
    for (auto& [k, v] : extra.items()) r.report[k] = v;
    r.report["reports"] = json::array();
    for (const auto& rep : reports) r.report["reports"].push_back(report_json(rep));
    return r;
  }

  json options_json() const {
    json o;
    if (!opts.file.empty()) o["file"] = opts.file;
    if (!opts.instance.empty()) o["instance"] = opts.instance;
    if (!opts.target.empty()) o["target"] = opts.target;
    if (!opts.coefficients.empty()) o["coefficients"] = opts.coefficients;
    if (opts.degree >= 0) o["degree"] = opts.degree;
    if (opts.upto >= 0) o["upto"] = opts.upto;
    o["side"] = opts.side;
    return o;
  }
};

std::optional<Resolver> load_file(Run& run) {
  if (run.opts.file.empty()) return std::nullopt;
  run.input += read_text(run.opts.file);
  return Resolver(load_presentation(run.opts.file));
}

std::string builtin_spec_text() { return print_hopf_spec(h1cop_spec()) + print_hopf_spec(u_spec()); }

// ---------------------------------------------------------------- finite instances

struct FiniteSetting {
  GroupInstance gi;
  ModuleComodulePtr M;
  std::string kind;
};

bool is_point(const RunOptions& o) { return o.instance == "point"; }

FiniteSetting finite_setting(Run& run) {
  const auto& o = run.opts;
  if (o.instance.empty()) usage_error(run.command + " needs --instance");
  GroupSetData gs;
  if (o.instance == "swap") {
    gs = swap_instance();
    run.input += "builtin:swap";
  } else if (o.instance == "s3") {
    gs = s3_instance();
    run.input += "builtin:s3";
  } else {
    const std::string text = read_text(o.instance);
    run.input += text;
    gs = parse_group_set(text);
  }
  validate_group_set(gs);
  FiniteSetting s{build_group_instance(gs), nullptr, o.coefficients.empty() ? gs.coefficients : o.coefficients};
  run.input += "\ncoefficients:" + s.kind;
  s.M = group_coefficients(s.gi, s.kind);
  run.extra["instance"] = {{"name", gs.name},
                           {"group_order", gs.elements.size()},
                           {"set_size", gs.set.size()},
                           {"coefficients", s.kind}};
  return s;
}

json dims_json(const std::vector<long>& v) { return json(v); }

// ---------------------------------------------------------------- commands

void cmd_verify_hopf(Run& run) {
  const int deg = run.degree(3);
  std::vector<HopfPtr> targets;
  if (auto r = load_file(run)) {
    if (!run.opts.target.empty()) {
      targets.push_back(r->hopf(run.opts.target));
    } else {
      for (const auto& n : r->file().hopf_names()) targets.push_back(r->hopf(n));
      for (const auto& p : r->file().pairs) targets.push_back(r->hopf(p.name));
    }
  } else {
    run.input += builtin_spec_text();
    const auto& b = builtins();
    const std::string t = run.opts.target;
    if (t.empty() || t == "h1cop") targets.push_back(b.h1cop);
    if (t.empty() || t == "F") targets.push_back(b.F);
    if (t.empty() || t == "U") targets.push_back(b.U);
    if (t.empty() || t == "bicrossed") targets.push_back(b.B);
    if (targets.empty()) usage_error("unknown built-in Hopf algebra '" + t + "' (h1cop, F, U, bicrossed)");
  }
  for (const auto& H : targets) {
    CheckReport rep = verify_hopf_axioms(*H, deg);
    rep.append(check_antipode_properties(*H, deg));
    rep.subject = H->name() + " (degree " + std::to_string(deg) + ")";
    run.reports.push_back(std::move(rep));
  }
}

void cmd_matched_pair(Run& run) {
  const int deg = run.degree(2);
  std::vector<MatchedPairPtr> pairs;
  if (auto r = load_file(run)) {
    if (!run.opts.target.empty()) {
      pairs.push_back(r->pair(run.opts.target));
    } else {
      for (const auto& p : r->file().pairs) pairs.push_back(r->pair(p.name));
    }
    if (pairs.empty()) semantic_error(run.opts.file + " declares no matched pair");
  } else {
    run.input += builtin_spec_text();
    pairs.push_back(builtins().pair);
  }
  for (const auto& p : pairs) {
    CheckReport rep = check_matched_pair(*p, deg);
    rep.subject = p->name() + " (degree " + std::to_string(deg) + ")";
    run.reports.push_back(std::move(rep));
  }
}

/// Coefficients with a module coalgebra and, when available, a module algebra.
struct CoefficientSetting {
  ModuleComodulePtr M;
  ModuleCoalgebraPtr C;
  ModuleAlgebraPtr A;
  std::optional<FiniteSetting> finite;
};

Character delta_character() {
  return Character{"δ", [](const Generator& g) { return g.name == "Y" ? Rational(1) : Rational(0); }};
}

CoefficientSetting coefficient_setting(Run& run, const std::string& builtin_default) {
  CoefficientSetting s;
  if (!run.opts.instance.empty()) {
    s.finite = finite_setting(run);
    s.M = s.finite->M;
    s.C = s.finite->gi.CX_module;
    s.A = s.finite->gi.FunX;
    return s;
  }
  if (auto r = load_file(run)) {
    std::string name = run.opts.target;
    if (name.empty()) {
      if (r->file().coefficients.empty()) semantic_error(run.opts.file + " declares no coefficients");
      name = r->file().coefficients.front().name;
    }
    s.M = r->coefficients(name);
    s.C = regular_module_coalgebra(s.M->H);
    return s;
  }
  run.input += builtin_spec_text();
  const auto& b = builtins();
  const std::string t = run.opts.target.empty() ? builtin_default : run.opts.target;
  run.input += "\ncoefficients:" + t;
  if (t == "trivial") {
    s.M = trivial_coefficients(b.B);
  } else if (t == "delta") {
    s.M = character_coefficients(b.B, delta_character(), b.B->one(), "¹k_δ");
  } else if (t == "regular") {
    s.M = regular_right_module(b.B);
  } else {
    usage_error("unknown built-in coefficients '" + t + "' (trivial, delta, regular)");
  }
  s.C = b.U_module;
  s.A = b.F_module;
  return s;
}

Samples samples_for(const Run& run) {
  Samples s;
  if (run.opts.degree >= 0) s.m_degree = s.h_degree = s.c_degree = run.opts.degree;
  return s;
}

void cmd_sayd(Run& run) {
  const std::string def = run.command == "check-sayd" ? "delta" : run.command == "ch-sayd" ? "trivial" : "regular";
  const CoefficientSetting s = coefficient_setting(run, def);
  const Samples smp = samples_for(run);
  CheckReport rep;
  if (run.command == "check-sayd") {
    rep = check_sayd(*s.M, smp);
  } else if (run.command == "ch-sayd") {
    rep = check_ch_sayd(*s.M, *s.C, smp);
  } else {
    if (!s.A) precondition_error("ah-sayd needs a module algebra: use --instance or the built-in coefficients");
    rep = check_ah_sayd(*s.M, *s.A, smp);
  }
  run.reports.push_back(std::move(rep));
}

void cmd_mpi(Run& run) {
  ModuleCoalgebraPtr C;
  ModuleAlgebraPtr A;
  HopfPtr H;
  std::string choice = "epsilon";
  if (!run.opts.instance.empty() || !run.opts.file.empty()) {
    const CoefficientSetting s = coefficient_setting(run, "trivial");
    H = s.M->H;
    C = s.C;
    A = s.A;
  } else {
    run.input += builtin_spec_text();
    const auto& b = builtins();
    H = b.B;
    C = b.U_module;
    A = b.F_module;
    if (!run.opts.target.empty()) choice = run.opts.target;
    if (choice != "epsilon" && choice != "delta") usage_error("check-mpi --target must be epsilon or delta");
  }
  ModularPair p{choice == "delta" ? delta_character() : counit_character(H), H->one()};
  const Samples smp = samples_for(run);
  run.reports.push_back(check_modular_pair(*H, p, run.degree(2)));
  run.reports.push_back(check_mpi_ch(p, *C, smp));
  if (A) run.reports.push_back(check_mpi_ah(p, *A, smp));
  run.extra["modular_pair"] = {{"delta", p.delta.name}, {"sigma", p.sigma.str(true)}};
}

void cmd_quotient(Run& run) {
  ModuleCoalgebraPtr C;
  ModularPair p;
  if (!run.opts.instance.empty()) {
    const FiniteSetting f = finite_setting(run);
    C = f.gi.CX_module;
    p = {counit_character(f.gi.G), f.gi.G->one()};
  } else if (auto r = load_file(run)) {
    if (run.opts.target.empty()) usage_error("quotient-coideal --file needs --target");
    const HopfPtr H = r->hopf(run.opts.target);
    C = regular_module_coalgebra(H);
    p = {counit_character(H), H->one()};
  } else {
    run.input += builtin_spec_text();
    const HopfPtr& B = builtins().B;
    C = regular_module_coalgebra(B);
    p = {counit_character(B), B->one()};
  }
  const CoidealQuotient q = build_coideal_quotient(C, p, samples_for(run));
  run.reports.push_back(q.report);
  run.extra["quotient"] = {{"coalgebra", C->name}, {"quotient", q.D->name}};
  if (C->V->is_finite()) {
    run.extra["quotient"]["ideal_rank"] = q.ideal_rank;
    run.extra["quotient"]["dimension"] = finite_words(q.D->V).size();
  }
}

CocyclicInstance build_instance(Run& run, int top) {
  if (is_point(run.opts)) {
    run.input += "builtin:point";
    run.extra["instance"] = {{"name", "point"}};
    return point_instance(top);
  }
  const FiniteSetting f = finite_setting(run);
  if (run.opts.side == "coalgebra") return coalgebra_instance(*f.M, *f.gi.CX_module, top);
  if (run.opts.side == "algebra") return algebra_instance(*f.M, *f.gi.FunX, top);
  usage_error("--side must be coalgebra or algebra");
}

void cmd_cocyclic(Run& run) {
  const int upto = run.upto(3);
  CocyclicInstance inst = build_instance(run, upto + 1);
  CheckReport rep = inst.construction;
  rep.subject = inst.name;
  rep.append(check_cocyclic(inst));
  run.reports.push_back(std::move(rep));
  run.extra["dims"] = json(std::vector<long>(inst.dims.begin(), inst.dims.end()));
}

void cmd_cohomology(Run& run) {
  const int upto = run.upto(3);
  CocyclicInstance inst = build_instance(run, upto + 1);
  CheckReport rep = inst.construction;
  rep.subject = inst.name;
  rep.append(check_cocyclic(inst));
  if (!inst.verified) {
    run.reports.push_back(std::move(rep));
    return;
  }
  const CohomologyTable t = cyclic_cohomology(inst, upto);
  Verdict agree("λ-subcomplex and bicomplex agree");
  agree.sample();
  if (!t.agree()) agree.fail("HC dimensions", json(t.hc).dump(), json(t.hc_bicomplex).dump());
  Verdict sq("bicomplex differential squares to zero");
  sq.sample();
  if (!t.bicomplex_square_zero) sq.fail("D∘D");
  rep.add(agree);
  rep.add(sq);
  run.reports.push_back(std::move(rep));
  run.extra["dims"] = json(std::vector<long>(inst.dims.begin(), inst.dims.end()));
  run.extra["HC"] = dims_json(t.hc);
  run.extra["HC_bicomplex"] = dims_json(t.hc_bicomplex);
  run.extra["HH"] = dims_json(t.hh);
}

void cmd_kaygun(Run& run) {
  const int upto = run.upto(2);
  const FiniteSetting f = finite_setting(run);
  const ModuleCoalgebra& C = *f.gi.CX_module;
  KaygunComparison k = check_iso(*f.M, C, upto);
  run.reports.push_back(k.report);
  for (int n = 0; n <= std::min(upto, 2); ++n) {
    CheckReport w = check_w_in_ker_pi(*f.M, C, n);
    w.subject += " (n = " + std::to_string(n) + ")";
    run.reports.push_back(std::move(w));
  }
  run.reports.push_back(commutator_identities(*f.M, C, std::min(upto, 2)));
  auto idx = [](const std::vector<Index>& v) { return json(std::vector<long>(v.begin(), v.end())); };
  run.extra["W_rank"] = idx(k.w_rank);
  run.extra["CM_dims"] = idx(k.cm_dims);
  run.extra["CH_dims"] = idx(k.ch_dims);
  run.extra["HC_CM"] = dims_json(k.hc_cm.hc);
  run.extra["HC_H"] = dims_json(k.hc_ch.hc);
}

void cmd_cup(Run& run) {
  const int top = run.upto(3);
  const FiniteSetting f = finite_setting(run);
  const CompatibleAction ca = group_compatible_action(f.gi);
  run.reports.push_back(check_compatible_action(ca));
  const ConvolutionAlgebra B(ca.C, ca.A);
  run.reports.push_back(check_convolution(B));
  run.reports.push_back(check_chi(B, ca));
  const CupSetting s = build_cup_setting(f.M, ca, top);
  run.reports.push_back(s.report);
  run.reports.push_back(check_psi(s, top - 1));
  std::vector<std::pair<int, int>> bidegrees;
  for (int p = 0; p + 1 <= top; ++p)
    for (int q = 0; p + q + 1 <= top && q <= 1; ++q)
      if (p <= 1) bidegrees.emplace_back(p, q);
  run.reports.push_back(check_cup(s, bidegrees));
  run.extra["convolution_dim"] = B.dim();
}

void cmd_reproduce(Run& run) {
  PaperReproduction p = reproduce_paper_examples(run.degree(3));
  run.input += builtin_spec_text();
  run.reports.push_back(p.report);
  for (const char* key : {"antipode_table", "antipode_inverse_table", "antipode_inverse_formula",
                          "ch_ayd_counterexample", "ah_ayd_counterexample"})
    run.extra[key] = p.json[key];
}

void cmd_run(Run& run) {
  if (run.opts.file.empty()) usage_error("run needs --file");
  const std::string text = read_text(run.opts.file);
  run.input += text;
  const PresentationFile f = parse_presentation(text);
  json results = json::array();
  for (const auto& d : f.checks) {
    if (d.command == "run" || d.command == "reproduce-paper")
      semantic_error("check directive cannot run '" + d.command + "'");
    RunOptions o = run.opts;
    o.target = d.target;
    o.degree = d.degree;
    const RunResult r = run_command(d.command, o);
    for (const auto& rep : r.report["reports"]) {
      CheckReport cr;
      cr.subject = d.command + " " + d.target + ": " + rep["subject"].get<std::string>();
      for (const auto& v : rep["verdicts"]) {
        Verdict x(v["check"].get<std::string>());
        x.samples = v["samples"].get<std::size_t>();
        if (!v["passed"].get<bool>()) x.fail(v.value("witness", ""), v.value("expected", ""), v.value("computed", ""));
        cr.add(x);
      }
      run.reports.push_back(std::move(cr));
    }
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{
      "verify-hopf", "check-matched-pair", "check-sayd", "ch-sayd", "ah-sayd", "check-mpi", "quotient-coideal",
      "check-cocyclic", "cohomology", "kaygun", "cup", "reproduce-paper", "run"};
  return names;
}

RunResult run_command(const std::string& command, const RunOptions& opts) {
  Run run{opts, command, command + "\n", {}, json::object()};
  if (command == "verify-hopf") {
    cmd_verify_hopf(run);
  } else if (command == "check-matched-pair") {
    cmd_matched_pair(run);
  } else if (command == "check-sayd" || command == "ch-sayd" || command == "ah-sayd") {
    cmd_sayd(run);
  } else if (command == "check-mpi") {
    cmd_mpi(run);
  } else if (command == "quotient-coideal") {
    cmd_quotient(run);
  } else if (command == "check-cocyclic") {
    cmd_cocyclic(run);
  } else if (command == "cohomology") {
    cmd_cohomology(run);
  } else if (command == "kaygun") {
    cmd_kaygun(run);
  } else if (command == "cup") {
    cmd_cup(run);
  } else if (command == "reproduce-paper") {
    cmd_reproduce(run);
  } else if (command == "run") {
    cmd_run(run);
  } else {
    usage_error("unknown command '" + command + "'");
  }
  return run.finish();
}

std::string summary_text(const nlohmann::ordered_json& report) {
  std::ostringstream out;
  for (const auto& rep : report["reports"]) {
    out << (rep["passed"].get<bool>() ? "PASS " : "FAIL ") << rep["subject"].get<std::string>() << "\n";
    for (const auto& v : rep["verdicts"]) {
      if (v["passed"].get<bool>()) continue;
      out << "  failed: " << v["check"].get<std::string>();
      if (v.contains("witness")) out << " at " << v["witness"].get<std::string>();
      out << "\n";
      if (v.contains("expected")) out << "    expected: " << v["expected"].get<std::string>() << "\n";
      if (v.contains("computed")) out << "    computed: " << v["computed"].get<std::string>() << "\n";
      if (v.contains("difference_pretty")) out << "    difference: " << v["difference_pretty"].get<std::string>() << "\n";
    }
  }
  for (const char* key : {"HC", "HC_bicomplex", "HH", "W_rank", "CM_dims", "CH_dims", "HC_CM", "HC_H", "dims"})
    if (report.contains(key)) out << key << " = " << report[key].dump() << "\n";
  out << (report["passed"].get<bool>() ? "passed" : "failed") << "\n";
  return out.str();
}

}  // namespace hopfcyc
