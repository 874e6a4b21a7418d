#include "doctest.h"
#include "hopfcyc/cocyclic.hpp"
#include "hopfcyc/errors.hpp"
#include "hopfcyc/instances.hpp"

using namespace hopfcyc;

namespace {

/// Orbits of G on X^{k}: (1/|G|) Σ_g fix(g)^k.
long burnside(const GroupSetData& gs, int k) {
  long total = 0;
  for (const auto& row : gs.action) {
    long fix = 0;
    for (std::size_t x = 0; x < row.size(); ++x) fix += row[x] == static_cast<int>(x);
    long p = 1;
    for (int i = 0; i < k; ++i) p *= fix;
    total += p;
  }
  return total / static_cast<long>(gs.action.size());
}

/// dim ker b_n - rank b_{n-1}, with b assembled here from the cofaces.
std::vector<long> hochschild_by_hand(const CocyclicInstance& inst, int upto) {
  auto b = [&](int n) {
    QMat m = zeros<Rational>(inst.dims[static_cast<std::size_t>(n + 1)], inst.dims[static_cast<std::size_t>(n)]);
    for (int i = 0; i <= n + 1; ++i) {
      const QMat& d = inst.cofaces[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
      if (i % 2 == 0) m += d; else m -= d;
    }
    return m;
  };
  std::vector<long> out;
  for (int n = 0; n <= upto; ++n) {
    const long ker = static_cast<long>(inst.dims[static_cast<std::size_t>(n)] - rank(b(n)));
    const long im = n == 0 ? 0 : static_cast<long>(rank(b(n - 1)));
    out.push_back(ker - im);
  }
  return out;
}

}  // namespace

TEST_CASE("point instance") {
  CocyclicInstance p = point_instance(4);
  CHECK(check_cocyclic(p).passed());
  const CohomologyTable t = cyclic_cohomology(p, 3);
  CHECK(t.hc == std::vector<long>{1, 0, 1, 0});
  CHECK(t.agree());
  CHECK(t.hh == hochschild_by_hand(p, 3));
}

TEST_CASE("relative tensor dimensions are orbit counts") {
  for (const GroupSetData& gs : {swap_instance(), s3_instance()}) {
    const GroupInstance gi = build_group_instance(gs);
    const auto M = group_coefficients(gi, "trivial");
    for (int n = 0; n <= 2; ++n) {
      CAPTURE(gs.name);
      CAPTURE(n);
      CHECK(relative_tensor(*M, *gi.CX_module, n).dim() == burnside(gs, n + 1));
    }
  }
  const GroupInstance sw = build_group_instance(swap_instance());
  const auto R = group_coefficients(sw, "regular");
  for (int n = 0; n <= 2; ++n) CHECK(relative_tensor(*R, *sw.CX_module, n).dim() == 2 * burnside(sw.data, n + 1));
}

TEST_CASE("swap instance is cocyclic on both sides") {
  const GroupInstance gi = build_group_instance(swap_instance());
  for (const std::string kind : {"trivial", "regular"}) {
    CAPTURE(kind);
    const auto M = group_coefficients(gi, kind);
    CocyclicInstance c = coalgebra_instance(*M, *gi.CX_module, 4);
    CHECK(c.construction.passed());
    CHECK(check_cocyclic(c).passed());
    CHECK(c.verified);
    const CohomologyTable t = cyclic_cohomology(c, 3);
    CHECK(t.agree());
    CHECK(t.bicomplex_square_zero);
    CHECK(t.hh == hochschild_by_hand(c, 3));
    CocyclicInstance a = algebra_instance(*M, *gi.FunX, 3);
    CHECK(check_cocyclic(a).passed());
  }
}

TEST_CASE("symbolic identities over the infinite example") {
  const auto& b = builtins();
  Samples s;
  s.h_degree = 1;
  s.c_degree = 1;
  CHECK(check_cocyclic_symbolic(*trivial_coefficients(b.B), *b.U_module, 1, s).passed());
}

TEST_CASE("a broken cyclic operator is rejected") {
  CocyclicInstance p = point_instance(3);
  p.tau[1] = -p.tau[1];
  CHECK_FALSE(check_cocyclic(p).passed());
  CHECK_FALSE(p.verified);
  bool thrown = false;
  try {
    cyclic_cohomology(p, 2);
  } catch (const Error& e) {
    thrown = e.kind() == ErrorKind::Precondition;
  }
  CHECK(thrown);
}

TEST_CASE("cochain operators") {
  const GroupInstance gi = build_group_instance(swap_instance());
  const auto M = group_coefficients(gi, "trivial");
  const AlgebraPtr k = M->M;
  const Word a = gi.point(0), b = gi.point(1);
  const TensorElt x = TensorElt::basis({k, gi.X}, {Word{}, a});
  // Δ of a group-like point doubles it
  CHECK(coface(*M, *gi.CX_module, x, 0) == TensorElt::basis({k, gi.X, gi.X}, {Word{}, a, a}));
  const TensorElt y = TensorElt::basis({k, gi.X, gi.X}, {Word{}, a, b});
  CHECK(codegeneracy(*M, *gi.CX_module, y, 0) == TensorElt::basis({k, gi.X}, {Word{}, a}));
  // τ moves the last chain leg to the front, acted on by the coaction (trivial here)
  CHECK(cyclic_operator(*M, *gi.CX_module, y) == TensorElt::basis({k, gi.X, gi.X}, {Word{}, b, a}));
  CHECK(matrix_text(identity<Rational>(2)) == "[1 0; 0 1]");
}
