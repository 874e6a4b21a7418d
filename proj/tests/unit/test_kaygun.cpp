#include "doctest.h"
#include "hopfcyc/instances.hpp"
#include "hopfcyc/kaygun.hpp"

using namespace hopfcyc;

TEST_CASE("L action on chains") {
  const GroupInstance gi = build_group_instance(swap_instance());
  const auto M = group_coefficients(gi, "trivial");
  const AlgebraPtr k = M->M;
  const Word a = gi.point(0), b = gi.point(1);
  const TensorElt x = TensorElt::basis({k, gi.X, gi.X}, {Word{}, a, a});
  // trivial M: L_g(m ⊗ c0 ⊗ c1) = m ⊗ g c0 ⊗ g c1
  CHECK(l_action(*M, *gi.CX_module, gi.element(1), x) == TensorElt::basis({k, gi.X, gi.X}, {Word{}, b, b}));
  CHECK(l_action(*M, *gi.CX_module, gi.element(0), x) == x);
  CHECK(commutator_identities(*M, *gi.CX_module, 2).passed());
}

TEST_CASE("Kaygun comparison on the swap instance") {
  const GroupInstance gi = build_group_instance(swap_instance());
  for (const std::string kind : {"trivial", "regular"}) {
    CAPTURE(kind);
    const auto M = group_coefficients(gi, kind);
    for (int n = 0; n <= 2; ++n) CHECK(check_w_in_ker_pi(*M, *gi.CX_module, n).passed());
    const KaygunComparison k = check_iso(*M, *gi.CX_module, 2);
    CHECK(k.report.passed());
    CHECK(k.cm_dims == k.ch_dims);
    for (std::size_t n = 0; n < k.pi.size(); ++n) {
      CHECK(k.pi[n] * k.pi_prime[n] == identity<Rational>(k.ch_dims[n]));
      CHECK(k.pi_prime[n] * k.pi[n] == identity<Rational>(k.cm_dims[n]));
    }
    CHECK(k.hc_cm.hc == k.hc_ch.hc);
    // the coalgebra-side cohomology computed directly
    CocyclicInstance c = coalgebra_instance(*M, *gi.CX_module, 3);
    REQUIRE(check_cocyclic(c).passed());
    CHECK(cyclic_cohomology(c, 2).hc == k.hc_cm.hc);
  }
}
