#pragma once

#include "hopfcyc/cocyclic.hpp"

#include <vector>

namespace hopfcyc {

/// L_g(m ⊗ c_0 ⊗ ... ⊗ c_n) = m S(g(1)) ⊗ g(2) c_0 ⊗ ... ⊗ g(n+2) c_n.
TensorElt l_action(const ModuleComodule& M, const ModuleCoalgebra& C, const AlgElt& g, const TensorElt& x);
TensorElt l_action(const ModuleComodule& M, const ModuleCoalgebra& C, const Word& g, const TensorElt& x);
/// [L_g, τ^i] x = L_g τ^i x - τ^i L_g x.
TensorElt w_generator(const ModuleComodule& M, const ModuleCoalgebra& C, const Word& g, int i, const TensorElt& x);

/// Operator identities for L_g on sampled chains of degree <= n: L_1 = id,
/// L_gh = L_g L_h, commutation with ∂_m (m <= n) and σ_j, and the closure
/// identities of W under τ, ∂_m and σ_j.
CheckReport commutator_identities(const ModuleComodule& M, const ModuleCoalgebra& C, int n, const Samples& s = {});

/// π([L_g, τ^i] x) = 0 for g in the basis of H, 1 <= i <= n+1 and all basis
/// chains x of a finite instance, plus π(τ L_g x) = ε(g) π(τ x).
CheckReport check_w_in_ker_pi(const ModuleComodule& M, const ModuleCoalgebra& C, int n);

struct KaygunComparison {
  CheckReport report;
  std::vector<Index> w_rank;      // rank of the saturated W^n
  std::vector<Index> cm_dims;     // dim CM^n = C^n / (W^n + span{L_h x - ε(h) x})
  std::vector<Index> ch_dims;     // dim C^n_H
  std::vector<QMat> pi;           // Π : CM^n -> C^n_H
  std::vector<QMat> pi_prime;     // Π' : C^n_H -> CM^n
  CocyclicInstance cm;
  CocyclicInstance ch;
  CohomologyTable hc_cm;
  CohomologyTable hc_ch;
};

/// Builds CM^n and C^n_H for n <= upto + 1, checks that Π and Π' are mutually
/// inverse and commute with all structure maps, and compares HC^0..HC^upto.
KaygunComparison check_iso(const ModuleComodule& M, const ModuleCoalgebra& C, int upto, int max_iterations = 32);

}  // namespace hopfcyc
