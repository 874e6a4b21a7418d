#include "doctest.h"
#include "hopfcyc/cocyclic.hpp"
#include "hopfcyc/errors.hpp"
#include "hopfcyc/instances.hpp"

using namespace hopfcyc;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Usage;
}

}  // namespace

TEST_CASE("S3 table is the composition of permutations") {
  const GroupSetData gs = s3_instance();
  validate_group_set(gs);
  // compose one-line permutations directly: (a∘b)(x) = a(b(x)); action[g] is g itself
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      const auto& pa = gs.action[a];
      const auto& pb = gs.action[b];
      const int ab = gs.mult[a][b];
      for (int x = 0; x < 3; ++x) CHECK(gs.action[static_cast<std::size_t>(ab)][static_cast<std::size_t>(x)] == pa[static_cast<std::size_t>(pb[static_cast<std::size_t>(x)])]);
    }
}

TEST_CASE("group instance carriers") {
  const GroupInstance gi = build_group_instance(swap_instance());
  CHECK(finite_words(gi.G->algebra()).size() == 2);
  CHECK(finite_words(gi.X).size() == 2);
  CHECK(verify_hopf_axioms(*gi.G, 2).passed());
  CHECK(validate_module_coalgebra(*gi.CX_module, 1).passed());
  CHECK(validate_module_algebra(*gi.FunX, 1).passed());
  // g swaps the points
  const AlgElt ga = gi.CX_module->act(gi.element(1), AlgElt::word(gi.X, gi.point(0)));
  CHECK(ga == AlgElt::word(gi.X, gi.point(1)));
  CHECK(gi.inverse(1) == 1);
  for (const std::string kind : {"trivial", "regular", "conjugation"})
    CHECK(validate_module_comodule(*group_coefficients(gi, kind), 1).passed());
  CHECK(kind_of([&] { group_coefficients(gi, "other"); }) == ErrorKind::Usage);
}

TEST_CASE("group set files") {
  const std::string ok = R"({"mult_table": [[0,1],[1,0]], "set": ["a","b"], "action_table": [[0,1],[1,0]]})";
  const GroupSetData gs = parse_group_set(ok);
  CHECK(gs.set.size() == 2);
  CHECK(gs.coefficients == "trivial");
  CHECK(kind_of([] { parse_group_set("{"); }) == ErrorKind::Syntax);
  CHECK(kind_of([] { parse_group_set(R"({"set": []})"); }) == ErrorKind::Semantic);
  // not associative: no identity row
  GroupSetData bad = swap_instance();
  bad.mult = {{1, 0}, {0, 1}};
  CHECK(kind_of([&] { validate_group_set(bad); }) == ErrorKind::Semantic);
  GroupSetData s3 = s3_instance();
  s3.normal = true;
  CHECK(kind_of([&] { validate_group_set(s3); }) == ErrorKind::Precondition);
  const GroupSetData shipped = load_group_set(std::string(HOPFCYC_DATA_DIR) + "/instances/swap.json");
  CHECK(shipped.mult == swap_instance().mult);
  CHECK(kind_of([] { load_group_set("/nonexistent.json"); }) == ErrorKind::IO);
}

TEST_CASE("module structures around F ▷◁ U") {
  const auto& b = builtins();
  CHECK(validate_module_coalgebra(*b.U_module, 2).passed());
  CHECK(validate_module_algebra(*b.F_module, 2).passed());
  const AlgElt X = AlgElt::gen(b.U->algebra(), "X");
  // (f ▷◁ u) v = ε(f) u v
  CHECK(b.U_module->act(Word{Generator("d", 1), Generator("X")}, X).is_zero());
  CHECK(b.U_module->act(Word{Generator("X")}, X) == X * X);
  // (f ▷◁ u) g = ε(f) (u ▹ g): X ▹ δ₁ = δ₂
  const AlgElt d1 = AlgElt::gen(b.F->algebra(), "d", 1);
  CHECK(b.F_module->act(Word{Generator("X")}, d1) == AlgElt::gen(b.F->algebra(), "d", 2));
}
