#include "doctest.h"
#include "hopfcyc/cup.hpp"
#include "hopfcyc/errors.hpp"
#include "hopfcyc/instances.hpp"

using namespace hopfcyc;

TEST_CASE("compatible action of C_X on Fun(X)") {
  const GroupInstance gi = build_group_instance(swap_instance());
  const CompatibleAction ca = group_compatible_action(gi);
  CHECK(check_compatible_action(ca).passed());
  // a·e_a = e_a (identity moves a to a), b·e_a = e_b
  const AlgElt ea = AlgElt::word(ca.A->V, finite_words(ca.A->V)[0]);
  CHECK(ca.act(gi.point(0), ea) == ea);
  CHECK_FALSE(ca.act(gi.point(1), ea) == ea);

  const GroupInstance s3 = build_group_instance(s3_instance());
  bool thrown = false;
  try {
    group_compatible_action(s3);
  } catch (const Error& e) {
    thrown = e.kind() == ErrorKind::Precondition;
  }
  CHECK(thrown);
}

TEST_CASE("convolution algebra Hom_H(C, A)") {
  const GroupInstance gi = build_group_instance(swap_instance());
  const CompatibleAction ca = group_compatible_action(gi);
  const ConvolutionAlgebra B(ca.C, ca.A);
  // a G-map out of the free orbit k[X] is fixed by its value at one point
  CHECK(B.dim() == static_cast<Index>(finite_words(gi.X).size()));
  CHECK(B.h_linearity_witness(B.unit()).empty());
  CHECK(check_convolution(B).passed());
  CHECK(check_chi(B, ca).passed());
  const AlgElt one = AlgElt::one(ca.A->V);
  CHECK(B.chi(ca, one) == B.unit());
  // a map that is not H-linear is refused
  QMat f = zeros<Rational>(B.unit().rows(), B.unit().cols());
  f(0, 0) = Rational(1);
  CHECK_FALSE(B.h_linearity_witness(f).empty());
  CHECK_THROWS_AS(B.convolve(f, f), Error);
}

TEST_CASE("cup products of cocycles are cocycles") {
  const GroupInstance gi = build_group_instance(swap_instance());
  const CompatibleAction ca = group_compatible_action(gi);
  for (const std::string kind : {"trivial", "regular"}) {
    CAPTURE(kind);
    const CupSetting s = build_cup_setting(group_coefficients(gi, kind), ca, 3);
    CHECK(s.report.passed());
    CHECK(check_psi(s, 2).passed());
    CHECK(check_cup(s, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}).passed());
  }
}

TEST_CASE("cup refuses non-cocycles") {
  const GroupInstance gi = build_group_instance(swap_instance());
  const CupSetting s = build_cup_setting(group_coefficients(gi, "regular"), group_compatible_action(gi), 2);
  const QMat b = hochschild_coboundary(s.alg, 0);
  QVec phi;
  for (Index j = 0; j < b.cols() && phi.size() == 0; ++j)
    if (!is_zero(QMat(b.col(j)))) phi = identity<Rational>(b.cols()).col(j);
  REQUIRE(phi.size() > 0);
  QVec y = zeros<Rational>(s.coalg.dims[0], 1);
  bool thrown = false;
  try {
    cup(s, 0, phi, 0, y);
  } catch (const Error& e) {
    thrown = e.kind() == ErrorKind::Precondition;
  }
  CHECK(thrown);
}
