#pragma once

#include "hopfcyc/coefficients.hpp"
#include "hopfcyc/linalg.hpp"
#include "hopfcyc/modules.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace hopfcyc {

// Chain operators on M ⊗ C^{⊗(n+1)} (leg 0 is M). Cofaces ∂_0..∂_{n+1} into
// degree n+1; codegeneracies σ_i into degree n-1 apply ε to c_{i+1}.
TensorElt coface(const ModuleComodule& M, const ModuleCoalgebra& C, const TensorElt& x, int i);
TensorElt codegeneracy(const ModuleComodule& M, const ModuleCoalgebra& C, const TensorElt& x, int i);
TensorElt cyclic_operator(const ModuleComodule& M, const ModuleCoalgebra& C, const TensorElt& x);

// Chain-level maps on M ⊗ A^{⊗(n+1)} whose transposes are the cochain
// operators d_i, s_i, t_n: (d_i f) = f ∘ merge_face(., i) and so on.
TensorElt merge_face(const ModuleComodule& M, const ModuleAlgebra& A, const TensorElt& x, int i);
TensorElt insert_unit(const ModuleComodule& M, const ModuleAlgebra& A, const TensorElt& x, int i);
TensorElt cyclic_shift(const ModuleComodule& M, const ModuleAlgebra& A, const TensorElt& x);
/// (m ⊗ ã) h = m h(1) ⊗ S(h(2)) ã, S(h(2)) acting diagonally.
TensorElt right_action(const ModuleComodule& M, const ModuleAlgebra& A, const TensorElt& x, const Word& h);

/// Basis words of a carrier that must be finite (an empty alphabet counts as
/// the ground field).
const std::vector<Word>& finite_words(const AlgebraPtr& a);

/// M ⊗ V^{⊗(n+1)} for finite carriers modulo a relation subspace.
struct RelativeTensorSpace {
  int n = 0;
  std::vector<AlgebraPtr> legs;
  std::vector<std::vector<Word>> basis;  // ambient basis, M leg first
  std::map<std::vector<Word>, Index> index;
  QMat relations;  // columns span the relation subspace
  Quotient<Rational> quotient;

  Index ambient_dim() const { return static_cast<Index>(basis.size()); }
  Index dim() const { return quotient.dim(); }
  QVec encode(const TensorElt& t) const;
  TensorElt decode(const QVec& v) const;
  TensorElt basis_tensor(Index j) const;
  /// π(t) in quotient coordinates.
  QVec project(const TensorElt& t) const { return quotient.P * encode(t); }
  bool in_relations(const TensorElt& t) const;
  /// Replaces the relation subspace by the column span of `columns`.
  void set_relations(const QMat& columns);
};

/// Ambient space without relations.
RelativeTensorSpace ambient_space(const std::vector<AlgebraPtr>& legs, int n);
/// M ⊗_H C^{⊗(n+1)}: relations m h ⊗ c̃ - m ⊗ h c̃.
RelativeTensorSpace relative_tensor(const ModuleComodule& M, const ModuleCoalgebra& C, int n);
/// M ⊗ A^{⊗(n+1)} modulo (m ⊗ ã) h - ε(h) m ⊗ ã; its dual is Hom_H(M ⊗ A^{⊗(n+1)}, k).
RelativeTensorSpace balanced_algebra_space(const ModuleComodule& M, const ModuleAlgebra& A, int n);

/// Matrix of a linear map between ambient spaces (columns: images of basis).
QMat ambient_matrix(const RelativeTensorSpace& from, const RelativeTensorSpace& to,
                    const std::function<TensorElt(const TensorElt&)>& op);

/// Finite cocyclic module: cochain spaces C^0..C^top with
/// cofaces[n][i] : C^n -> C^{n+1} (i = 0..n+1), codegeneracies[n][i] :
/// C^{n+1} -> C^n (i = 0..n) and tau[n] : C^n -> C^n.
struct CocyclicInstance {
  std::string name;
  std::string side;  // "coalgebra", "algebra" or "custom"
  int top = 0;
  std::vector<Index> dims;
  std::vector<std::vector<QMat>> cofaces;
  std::vector<std::vector<QMat>> codegeneracies;
  std::vector<QMat> tau;
  CheckReport construction;  // well-definedness of the induced operators
  bool verified = false;
};

/// Ambient chain operators of a (para-)cocyclic module.
struct ChainOperators {
  std::function<TensorElt(const TensorElt&, int)> coface;
  std::function<TensorElt(const TensorElt&, int)> codegeneracy;
  std::function<TensorElt(const TensorElt&)> tau;
};
ChainOperators coalgebra_operators(const ModuleComodule& M, const ModuleCoalgebra& C);

/// Operators induced on the quotients spaces[0..top] (covariant direction).
CocyclicInstance induced_instance(const std::string& name, const std::string& side,
                                  const std::vector<RelativeTensorSpace>& spaces, const ChainOperators& ops);

CocyclicInstance coalgebra_instance(const ModuleComodule& M, const ModuleCoalgebra& C, int top,
                                    const std::string& name = {});
CocyclicInstance algebra_instance(const ModuleComodule& M, const ModuleAlgebra& A, int top,
                                  const std::string& name = {});
/// The cocyclic module of the ground field: every space one-dimensional.
CocyclicInstance point_instance(int top);

/// All cosimplicial and cyclic identities as exact matrix equations for
/// n <= top - 1, plus τ_n^{n+1} = id for n <= top. Sets inst.verified.
CheckReport check_cocyclic(CocyclicInstance& inst);

/// Identities on sampled chains over arbitrary carriers; differences are
/// tested against the bounded relation span.
CheckReport check_cocyclic_symbolic(const ModuleComodule& M, const ModuleCoalgebra& C, int max_n,
                                    const Samples& s = {});

/// b = Σ_{i=0}^{n+1} (-1)^i ∂_i : C^n -> C^{n+1}.
QMat hochschild_coboundary(const CocyclicInstance& inst, int n);
/// λ = (-1)^n τ_n.
QMat cyclic_lambda(const CocyclicInstance& inst, int n);

struct CohomologyTable {
  std::vector<long> hc;            // λ-subcomplex
  std::vector<long> hc_bicomplex;  // truncated cyclic bicomplex
  std::vector<long> hh;
  bool bicomplex_square_zero = true;
  bool agree() const { return hc == hc_bicomplex; }
};

std::vector<long> hochschild_dims(const CocyclicInstance& inst, int upto);
std::vector<long> cyclic_dims_lambda(const CocyclicInstance& inst, int upto);
/// Returns the dimensions; `square_zero` receives whether D∘D = 0 held.
std::vector<long> cyclic_dims_bicomplex(const CocyclicInstance& inst, int upto, bool* square_zero = nullptr);
/// Needs inst.verified and inst.top >= upto + 1.
CohomologyTable cyclic_cohomology(const CocyclicInstance& inst, int upto);

/// [a b; c d] with exact entries.
std::string matrix_text(const QMat& m);
nlohmann::ordered_json matrix_json(const QMat& m);
nlohmann::ordered_json instance_json(const CocyclicInstance& inst);

}  // namespace hopfcyc
