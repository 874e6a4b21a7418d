#include "doctest.h"
#include "hopfcyc/cli.hpp"
#include "hopfcyc/errors.hpp"
#include "hopfcyc/report.hpp"

#include <set>

using namespace hopfcyc;

TEST_CASE("FNV-1a test vectors") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("error classes map to distinct exit codes") {
  std::set<int> codes{0, 1};
  for (ErrorKind k : {ErrorKind::Usage, ErrorKind::Lexical, ErrorKind::Syntax, ErrorKind::Semantic,
                      ErrorKind::Structural, ErrorKind::NonTermination, ErrorKind::Precondition, ErrorKind::IO})
    CHECK(codes.insert(exit_code(k)).second);
}

TEST_CASE("verify-hopf at degree 0 passes vacuously") {
  RunOptions o;
  o.degree = 0;
  const RunResult r = run_command("verify-hopf", o);
  CHECK(r.passed);
  CHECK(r.report["reports"].size() == 4);
}

TEST_CASE("cohomology of the shipped swap instance") {
  RunOptions o;
  o.instance = std::string(HOPFCYC_DATA_DIR) + "/instances/swap.json";
  o.upto = 3;
  const RunResult r = run_command("cohomology", o);
  CHECK(r.passed);
  CHECK(r.report["HC"] == nlohmann::ordered_json({1, 0, 1, 0}));
  CHECK(r.report["HC"] == r.report["HC_bicomplex"]);
}

TEST_CASE("reproduce-paper report") {
  const RunResult a = run_command("reproduce-paper", {});
  const RunResult b = run_command("reproduce-paper", {});
  CHECK(a.report.dump() == b.report.dump());
  const std::string text = a.report.dump();
  CHECK(text.find("X⊗(δ₁▷◁X) + YX⊗(δ₁²▷◁1)") != std::string::npos);
  CHECK(text.find("δ₁⊗(δ₁▷◁X) − δ₁⊗(δ₁²▷◁1)") != std::string::npos);
  CHECK(a.report["ch_ayd_counterexample"]["match"] == true);
  CHECK(a.report["ah_ayd_counterexample"]["match"] == true);
  CHECK_FALSE(summary_text(a.report).empty());
}

TEST_CASE("usage and input errors") {
  auto kind = [](const std::string& cmd, const RunOptions& o) {
    try {
      run_command(cmd, o);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Structural;
  };
  CHECK(kind("bogus", {}) == ErrorKind::Usage);
  CHECK(kind("cohomology", {}) == ErrorKind::Usage);
  RunOptions missing;
  missing.file = "/nonexistent.hopf";
  CHECK(kind("verify-hopf", missing) == ErrorKind::IO);
  RunOptions s3;
  s3.instance = "s3";
  CHECK(kind("cup", s3) == ErrorKind::Precondition);
}

TEST_CASE("run executes check directives") {
  RunOptions o;
  o.file = std::string(HOPFCYC_DATA_DIR) + "/presentations/bicrossed.hopf";
  const RunResult r = run_command("run", o);
  CHECK(r.passed);
  CHECK(r.report["reports"].size() == 2);
}
