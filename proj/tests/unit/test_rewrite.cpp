#include "doctest.h"
#include "hopfcyc/errors.hpp"
#include "hopfcyc/presentation.hpp"
#include "hopfcyc/rewrite.hpp"

#include <cstdlib>

using namespace hopfcyc;

namespace {

LetterPattern L(const std::string& n) { return {n, IndexExpr::none()}; }
PatternTerm T(int c, std::vector<LetterPattern> w) { return {CoeffExpr{Rational(c), ""}, std::move(w)}; }

// [Y, X] = X, i.e. X Y -> Y X - X.
RuleSet affine() {
  RewriteRule r;
  r.lhs = {L("X"), L("Y")};
  r.rhs = {T(1, {L("Y"), L("X")}), T(-1, {L("X")})};
  return RuleSet(Alphabet({{"Y"}, {"X"}}), {r});
}

Word w(std::initializer_list<const char*> letters) {
  Word out;
  for (const char* l : letters) out.emplace_back(l);
  return out;
}

}  // namespace

TEST_CASE("normal forms in the affine Lie algebra envelope") {
  const RuleSet rs = affine();
  CHECK(rs.is_normal(w({"Y", "X"})));
  CHECK_FALSE(rs.is_normal(w({"X", "Y"})));
  // X X Y = X(Y X - X) = (Y X - X) X - X X = Y X X - 2 X X
  const Terms n = rs.normalize_word(w({"X", "X", "Y"}));
  CHECK(n == Terms{{w({"Y", "X", "X"}), Rational(1)}, {w({"X", "X"}), Rational(-2)}});
  // X Y Y = (Y X - X) Y = Y X Y - X Y = Y(Y X - X) - (Y X - X) = Y Y X - 2 Y X + X
  const Terms m = rs.normalize_word(w({"X", "Y", "Y"}));
  CHECK(m == Terms{{w({"Y", "Y", "X"}), Rational(1)}, {w({"Y", "X"}), Rational(-2)}, {w({"X"}), Rational(1)}});
}

TEST_CASE("indexed schema rules with conditions") {
  RewriteRule r;
  r.lhs = {{"d", IndexExpr::variable("k")}, {"d", IndexExpr::variable("i")}};
  r.rhs = {{CoeffExpr{Rational(1), ""}, {{"d", IndexExpr::variable("i")}, {"d", IndexExpr::variable("k")}}}};
  r.conditions = {{"k", Condition::Op::Gt, IndexExpr::variable("i")}};
  const RuleSet rs(Alphabet({{"d", true, 1, -1, true}}), {r});
  const Word w3{Generator("d", 3), Generator("d", 1), Generator("d", 2)};
  const Terms n = rs.normalize_word(w3);
  CHECK(n == Terms{{Word{Generator("d", 1), Generator("d", 2), Generator("d", 3)}, Rational(1)}});
  CHECK(validate_ruleset(rs, 4).ok());
}

TEST_CASE("termination order violations are reported") {
  RewriteRule grow;
  grow.lhs = {L("X")};
  grow.rhs = {T(1, {L("X"), L("X")})};
  const RuleSet rs(Alphabet({{"X"}}), {grow});
  const auto d = validate_ruleset(rs, 2);
  CHECK_FALSE(d.order_violations.empty());
  CHECK_FALSE(d.ok());
}

TEST_CASE("non-confluent overlaps are reported") {
  // X X -> Y and X Y -> X: X X Y reduces to Y Y and to Y.
  RewriteRule a, b;
  a.lhs = {L("X"), L("X")};
  a.rhs = {T(1, {L("Y")})};
  b.lhs = {L("X"), L("Y")};
  b.rhs = {T(1, {L("X")})};
  const RuleSet rs(Alphabet({{"Y"}, {"X"}}), {a, b});
  const auto d = validate_ruleset(rs, 3);
  CHECK(d.order_violations.empty());
  CHECK_FALSE(d.non_confluent.empty());
}

TEST_CASE("the shipped H1cop rules terminate and are confluent") {
  const HopfSpec s = h1cop_spec();
  const auto d = validate_ruleset(RuleSet(Alphabet(s.families), s.rules), 4);
  CHECK(d.ok());
  CHECK(d.overlaps_checked > 0);
}

TEST_CASE("step limit raises a non-termination error") {
  RewriteRule r;
  r.lhs = {L("X"), L("Y")};
  r.rhs = {T(1, {L("Y"), L("X")}), T(-1, {L("X")})};
  const RuleSet rs(Alphabet({{"Y"}, {"X"}}), {r});
  Word big;
  for (int i = 0; i < 6; ++i) big.emplace_back("X");
  for (int i = 0; i < 6; ++i) big.emplace_back("Y");
  setenv("HOPFCYC_STEP_LIMIT", "5", 1);
  bool thrown = false;
  try {
    rs.normalize_word(big);
  } catch (const Error& e) {
    thrown = e.kind() == ErrorKind::NonTermination;
  }
  unsetenv("HOPFCYC_STEP_LIMIT");
  CHECK(thrown);
  CHECK_FALSE(rs.normalize_word(big).empty());
}
