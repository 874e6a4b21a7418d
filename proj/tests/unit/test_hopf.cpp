#include "doctest.h"
#include "hopfcyc/dsl.hpp"
#include "hopfcyc/instances.hpp"

using namespace hopfcyc;

namespace {

AlgElt gen(const HopfPtr& H, const std::string& n, int i = -1) { return AlgElt::gen(H->algebra(), n, i); }

/// m ∘ (S ⊗ id) ∘ Δ, computed leg by leg.
AlgElt left_convolution(const HopfAlgebra& H, const AlgElt& h) {
  return multiply_legs(leg_apply(H.coproduct(h), 0, H.antipode_map()));
}

}  // namespace

TEST_CASE("coproduct of H1cop generators") {
  const HopfPtr H = builtins().h1cop;
  const AlgElt X = gen(H, "X"), Y = gen(H, "Y"), d1 = gen(H, "d", 1), d2 = gen(H, "d", 2), one = H->one();
  CHECK(H->coproduct(X) == tensor(X, one) + tensor(one, X) + tensor(Y, d1));
  CHECK(H->coproduct(Y) == tensor(Y, one) + tensor(one, Y));
  CHECK(H->coproduct(d1) == tensor(d1, one) + tensor(one, d1));
  // δ₂ = [X, δ₁] gives Δ(δ₂) = δ₂ ⊗ 1 + 1 ⊗ δ₂ + δ₁ ⊗ δ₁.
  CHECK(H->coproduct(d2) == tensor(d2, one) + tensor(one, d2) + tensor(d1, d1));
  CHECK(H->counit(X).is_zero());
  CHECK(H->counit(one) == Rational(1));
}

TEST_CASE("product rules of H1cop") {
  const HopfPtr H = builtins().h1cop;
  const AlgElt X = gen(H, "X"), Y = gen(H, "Y");
  for (int i = 1; i <= 3; ++i) {
    const AlgElt di = gen(H, "d", i);
    CHECK(X * di == gen(H, "d", i + 1) + di * X);
    CHECK(Y * di == Rational(i) * di + di * Y);
  }
  CHECK(Y * X - X * Y == X);
}

TEST_CASE("antipode values from the convolution identity") {
  const HopfPtr H = builtins().h1cop;
  const AlgElt d1 = gen(H, "d", 1), d2 = gen(H, "d", 2);
  // S(δ₂) + δ₂ + S(δ₁)δ₁ = 0
  CHECK(H->antipode(d2) == -d2 + d1 * d1);
  for (const auto& w : H->algebra()->basis_up_to(3)) {
    const AlgElt h = H->elt(w);
    CHECK(left_convolution(*H, h) == H->counit(h) * H->one());
    CHECK(H->antipode(H->antipode_inverse(h)) == h);
    CHECK(H->antipode_inverse(H->antipode(h)) == h);
  }
}

TEST_CASE("built-in Hopf algebras pass the axiom suite") {
  const auto& b = builtins();
  for (const HopfPtr& H : {b.h1cop, b.F, b.U, b.B}) {
    CAPTURE(H->name());
    CHECK(verify_hopf_axioms(*H, 3).passed());
    CHECK(check_antipode_properties(*H, 2).passed());
  }
  CHECK(verify_hopf_axioms(*b.h1cop, 0).passed());
  CHECK(counit_character(b.B).validate(*b.B, 3).passed);
}

TEST_CASE("a wrong antipode is detected") {
  Resolver r(parse_presentation(R"(
hopf Bad {
  gen X;
  coproduct X = X ⊗ 1 + 1 ⊗ X;
  counit X = 0;
  antipode X = X;
}
)"));
  const CheckReport rep = verify_hopf_axioms(*r.hopf("Bad"), 2);
  CHECK_FALSE(rep.passed());
}

TEST_CASE("F ▷◁ U matches H1cop") {
  const auto& b = builtins();
  CHECK(check_matched_pair(*b.pair, 2).passed());
  const AlgElt X = gen(b.B, "X"), d1 = gen(b.B, "d", 1);
  CHECK(X * d1 == gen(b.B, "d", 2) + d1 * X);
  CHECK((d1 * X).str(true) == "(δ₁▷◁X)");
  CHECK(b.pair->act(Word{Generator("X")}, Word{Generator("d", 1)}) == AlgElt::gen(b.F->algebra(), "d", 2));
  CHECK(b.pair->act(Word{Generator("Y")}, Word{Generator("d", 3)}) ==
        Rational(3) * AlgElt::gen(b.F->algebra(), "d", 3));
}

TEST_CASE("a wrong matched pair action is detected") {
  Resolver r(parse_presentation(R"(
builtin F = F;
builtin U = U;
matched_pair P {
  F = F;
  U = U;
  act X d[k] = d[k+2];
  act Y d[k] = k d[k];
  coact Y = Y ⊗ 1;
  coact X = X ⊗ 1 + Y ⊗ d[1];
}
)"));
  CHECK_FALSE(check_matched_pair(*r.pair("P"), 2).passed());
}
