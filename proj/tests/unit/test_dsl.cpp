#include "doctest.h"
#include "hopfcyc/coefficients.hpp"
#include "hopfcyc/dsl.hpp"
#include "hopfcyc/errors.hpp"

using namespace hopfcyc;

namespace {

std::string data(const std::string& rel) { return std::string(HOPFCYC_DATA_DIR) + "/" + rel; }

struct Failure {
  ErrorKind kind;
  int line;
  int column;
};

Failure parse_failure(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const ParseError& e) {
    return {e.kind(), e.line(), e.column()};
  }
  FAIL("accepted: " << text);
  return {ErrorKind::Usage, 0, 0};
}

}  // namespace

TEST_CASE("shipped H1cop file equals the built-in presentation") {
  const PresentationFile f = load_presentation(data("presentations/h1cop.hopf"));
  REQUIRE(f.hopf.size() == 1);
  CHECK(f.hopf[0] == h1cop_spec());
  const Resolver r(f);
  CHECK(check_same_structure(*r.hopf("H1cop"), *builtins().h1cop, 3).passed());
  REQUIRE(f.checks.size() == 1);
  CHECK(f.checks[0] == CheckDirective{"verify-hopf", "H1cop", 3});
}

TEST_CASE("shipped bicrossed file builds F ▷◁ U") {
  const PresentationFile f = load_presentation(data("presentations/bicrossed.hopf"));
  CHECK(f.hopf[0] == u_spec());
  const Resolver r(f);
  CHECK(check_matched_pair(*r.pair("FU"), 2).passed());
  CHECK(check_same_structure(*r.hopf("FU"), *builtins().B, 3).passed());
  const auto k = r.coefficients("k");
  CHECK(k->trivial_action);
}

TEST_CASE("print then parse is the identity on shipped files") {
  for (const char* rel : {"presentations/h1cop.hopf", "presentations/bicrossed.hopf"}) {
    CAPTURE(rel);
    const PresentationFile f = load_presentation(data(rel));
    const std::string text = print_presentation(f);
    CHECK(parse_presentation(text) == f);
    CHECK(print_presentation(parse_presentation(text)) == text);
  }
}

TEST_CASE("empty and comment-only files") {
  CHECK(parse_presentation("").empty());
  CHECK(parse_presentation("# nothing here\n\n").empty());
}

TEST_CASE("error classes and positions") {
  const Failure grow = parse_failure("hopf A { gen X; rule X -> X X; }");
  CHECK(grow.kind == ErrorKind::NonTermination);

  const Failure lex = parse_failure("hopf A {\n  gen X $\n}");
  CHECK(lex.kind == ErrorKind::Lexical);
  CHECK(lex.line == 2);
  CHECK(lex.column == 9);

  CHECK(parse_failure("hopf A { gen X }").kind == ErrorKind::Syntax);
  CHECK(parse_failure("hopf A { gen X; rule X -> ; }").kind == ErrorKind::Syntax);
  CHECK(parse_failure("hopf A { gen X; rule Z -> X; }").kind == ErrorKind::Semantic);
  CHECK(parse_failure("hopf A { gen d[k]; rule d -> d[1]; }").kind == ErrorKind::Semantic);
  CHECK(parse_failure("hopf A { gen X; counit X = k; }").kind == ErrorKind::Semantic);
  CHECK(parse_failure("hopf A { gen X; }\nhopf A { gen Y; }").kind == ErrorKind::Semantic);
  CHECK(parse_failure("check verify-hopf Nope;").kind == ErrorKind::Semantic);
  CHECK(parse_failure("coefficients k over Nope trivial;").kind == ErrorKind::Semantic);
}

TEST_CASE("character coefficients") {
  const PresentationFile f = parse_presentation(R"(
builtin H = h1cop;
coefficients delta over H character { Y = 1; X = 0; d[k] = 0; } sigma 1;
)");
  const Resolver r(f);
  const auto M = r.coefficients("delta");
  const AlgElt m = AlgElt::one(M->M);
  CHECK(M->act(m, Word{Generator("Y")}) == m);
  CHECK(M->act(m, Word{Generator("X")}).is_zero());
  CHECK(check_sayd(*M).passed());
  CHECK(parse_presentation(print_presentation(f)) == f);
}

TEST_CASE("load errors name the file") {
  bool io = false;
  try {
    load_presentation("/nonexistent.hopf");
  } catch (const Error& e) {
    io = e.kind() == ErrorKind::IO;
  }
  CHECK(io);
}
