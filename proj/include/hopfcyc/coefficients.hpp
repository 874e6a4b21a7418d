#pragma once

#include "hopfcyc/hopf.hpp"
#include "hopfcyc/linalg.hpp"
#include "hopfcyc/modules.hpp"

#include <functional>
#include <memory>
#include <utility>
#include <vector>

namespace hopfcyc {

using TupleSpan = SparseSpan<std::vector<Word>>;

/// Tuples of basis words (one list per leg) with total weight <= degree.
std::vector<std::vector<Word>> basis_tuples(const std::vector<AlgebraPtr>& legs, int degree);

/// Span of m h ⊗ c̃ - m ⊗ h c̃ in M ⊗ C^{⊗k} over sampled m, h, c̃ (exact for
/// finite carriers).
TupleSpan coalgebra_relation_span(const ModuleComodule& M, const ModuleCoalgebra& C, int k, int degree);
/// Span of (m ⊗ ã) h - ε(h) m ⊗ ã in M ⊗ A^{⊗k}, where
/// (m ⊗ ã) h = m h(1) ⊗ S(h(2)) a_0 ⊗ ... ⊗ S(h(k+1)) a_{k-1}.
TupleSpan algebra_relation_span(const ModuleComodule& M, const ModuleAlgebra& A, int k, int degree);

/// Both sides of the AYD condition (legs H, M):
/// first = ∇(m h), second = S(h(3)) m<-1> h(1) ⊗ m<0> h(2).
std::pair<TensorElt, TensorElt> ayd_sides(const ModuleComodule& M, const Word& m, const Word& h);
/// Both sides of the C-relative AYD condition (legs C, M):
/// first = (m h)<-1> c ⊗ (m h)<0>, second = S(h(3)) m<-1> h(1) c ⊗ m<0> h(2).
std::pair<TensorElt, TensorElt> ch_ayd_sides(const ModuleComodule& M, const ModuleCoalgebra& C, const Word& m,
                                             const Word& h, const Word& c);
/// Same with S^-1(h(3)) in place of S(h(3)) (the YD variant).
std::pair<TensorElt, TensorElt> ch_yd_sides(const ModuleComodule& M, const ModuleCoalgebra& C, const Word& m,
                                            const Word& h, const Word& c);
/// Both sides of the A-relative AYD condition (legs A, M):
/// first = S^-1((m h)<-1>) a ⊗ (m h)<0>, second = S^-1(m<-1> h(1)) h(3) a ⊗ m<0> h(2).
std::pair<TensorElt, TensorElt> ah_ayd_sides(const ModuleComodule& M, const ModuleAlgebra& A, const Word& m,
                                             const Word& h, const Word& a);

/// Sample bounds: weights of m, h and of the (co)algebra words.
struct Samples {
  int m_degree = 2;
  int h_degree = 2;
  int c_degree = 2;
  int chain_length = 2;
};

CheckReport check_sayd(const ModuleComodule& M, const Samples& s = {});
CheckReport check_ch_sayd(const ModuleComodule& M, const ModuleCoalgebra& C, const Samples& s = {});
CheckReport check_ch_yd(const ModuleComodule& M, const ModuleCoalgebra& C, const Samples& s = {});
CheckReport check_ah_sayd(const ModuleComodule& M, const ModuleAlgebra& A, const Samples& s = {});

/// A character δ and a group-like σ with δ(σ) = 1.
struct ModularPair {
  Character delta;
  AlgElt sigma;
};

/// S_δ(h) = δ(h(1)) S(h(2)) and S_δ^-1(h) = S^-1(h(1)) δ(h(2)).
AlgElt twisted_antipode(const HopfAlgebra& H, const Character& delta, const AlgElt& h);
AlgElt twisted_antipode_inverse(const HopfAlgebra& H, const Character& delta, const AlgElt& h);

/// Validates δ, σ and δ(σ) = 1.
CheckReport check_modular_pair(const HopfAlgebra& H, const ModularPair& p, int degree);
/// S_δ^2(h) c = σ h σ^-1 c on sampled h, c; on success `out` receives ^σk_δ.
CheckReport check_mpi_ch(const ModularPair& p, const ModuleCoalgebra& C, const Samples& s = {},
                         ModuleComodulePtr* out = nullptr);
/// S_δ^-2(h) a = σ^-1 h σ a on sampled h, a.
CheckReport check_mpi_ah(const ModularPair& p, const ModuleAlgebra& A, const Samples& s = {},
                         ModuleComodulePtr* out = nullptr);

enum class ActionShape { Cocommutative, Commutative };
/// Cocommutative: h(1)c_1 ⊗ h(2)c_2 = h(2)c_1 ⊗ h(1)c_2.
/// Commutative: h(g c) = g(h c).
CheckReport check_action_shape(const LeftModule& V, ActionShape kind, const Samples& s = {});

/// D = C/I with I spanned by S_δ^2(h)c - σhσ^-1 c, plus the projection.
struct CoidealQuotient {
  ModuleCoalgebraPtr D;
  std::function<AlgElt(const Word&)> project;  // C basis word -> D
  std::size_t ideal_rank = 0;  // finite case only
  CheckReport report;
};

/// Built-in strategy for C = F▷◁U acting on itself with (ε, 1): D = U via
/// φ(f▷◁u) = ε(f)u. Finite strategy for finite-dimensional C.
CoidealQuotient build_coideal_quotient(const ModuleCoalgebraPtr& C, const ModularPair& p, const Samples& s = {});

/// M ⊗ N with (m⊗n)h = m h(2) ⊗ n h(1) and coaction m<-1>n<-1> ⊗ m<0> ⊗ n<0>.
/// Requires finite carriers; throws a precondition error (with the failed
/// checks in the message) if M is not C-relative AYD or N is not C-relative YD.
ModuleComodulePtr tensor_ayd_yd(const ModuleComodulePtr& M, const ModuleComodulePtr& N, const ModuleCoalgebra& C,
                                const Samples& s = {}, CheckReport* preconditions = nullptr);

}  // namespace hopfcyc
