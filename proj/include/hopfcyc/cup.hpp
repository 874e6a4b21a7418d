#pragma once

#include "hopfcyc/cocyclic.hpp"
#include "hopfcyc/instances.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hopfcyc {

/// Left action of a module coalgebra C on a module algebra A (same H).
struct CompatibleAction {
  ModuleCoalgebraPtr C;
  ModuleAlgebraPtr A;
  std::function<AlgElt(const Word& c, const Word& a)> act_word;

  AlgElt act(const Word& c, const AlgElt& a) const;
};

/// (hc)a = h(ca), c(ab) = (c(1)a)(c(2)b) and c1 = ε(c)1 on all basis words
/// of finite H, C, A.
CheckReport check_compatible_action(const CompatibleAction& ca);

/// C_X acting on Fun(X) for a simply transitive action: x·e_z = e_{g z}
/// where g is the element with g·x_0 = x.
CompatibleAction group_compatible_action(const GroupInstance& gi);

/// Hom_H(C, A) for finite C and A. A map is a dim A x dim C matrix whose
/// column j is f(c_j) in the basis of A.
class ConvolutionAlgebra {
 public:
  ConvolutionAlgebra(ModuleCoalgebraPtr C, ModuleAlgebraPtr A);

  const ModuleCoalgebra& coalgebra() const { return *C_; }
  const ModuleAlgebra& algebra() const { return *A_; }
  /// Basis of Hom_H(C, A).
  const std::vector<QMat>& basis() const { return basis_; }
  Index dim() const { return static_cast<Index>(basis_.size()); }

  /// η∘ε.
  QMat unit() const;
  /// Empty when f(hc) = h f(c) on all basis words, otherwise a witness.
  std::string h_linearity_witness(const QMat& f) const;
  /// (f∗g)(c) = f(c(1)) g(c(2)); throws on non H-linear input.
  QMat convolve(const QMat& f, const QMat& g) const;
  AlgElt apply(const QMat& f, const Word& c) const;
  AlgElt apply(const QMat& f, const AlgElt& c) const;
  /// χ(a)(c) = c·a.
  QMat chi(const CompatibleAction& ca, const AlgElt& a) const;

  QVec coords(const AlgElt& a) const;

 private:
  QMat convolve_unchecked(const QMat& f, const QMat& g) const;

  ModuleCoalgebraPtr C_;
  ModuleAlgebraPtr A_;
  std::vector<QMat> basis_;
};

/// Associativity and unitality of ∗ on all triples of basis maps.
CheckReport check_convolution(const ConvolutionAlgebra& B);
/// χ(a) is H-linear, χ(1) = η∘ε and χ(ab) = χ(a)∗χ(b) on all basis pairs.
CheckReport check_chi(const ConvolutionAlgebra& B, const CompatibleAction& ca);

/// Everything the cup product needs for degrees 0..top.
struct CupSetting {
  ModuleComodulePtr M;
  CompatibleAction action;
  int top = 0;
  CocyclicInstance alg;    // C^*_H(A, M), cochains in dual coordinates
  CocyclicInstance coalg;  // C^*_H(C, M), chains in quotient coordinates
  CocyclicInstance plain;  // C^*(A), cochains on the basis of A^{⊗(n+1)}
  std::vector<RelativeTensorSpace> alg_spaces;
  std::vector<RelativeTensorSpace> coalg_spaces;
  std::vector<RelativeTensorSpace> plain_spaces;
  /// psi[n][k] is the matrix G with Ψ(φ ⊗ y)(ã_k) = φ^T G y.
  std::vector<std::vector<QMat>> psi;
  CheckReport report;  // coefficient and action checks, construction of Ψ
};

/// The ordinary cocyclic module of a finite algebra: d_i merges, d_{n+1}
/// moves a_{n+1} in front of a_0, s_i inserts 1, t rotates.
CocyclicInstance plain_algebra_instance(const ModuleAlgebra& A, int top, std::vector<RelativeTensorSpace>* spaces = nullptr);

CupSetting build_cup_setting(const ModuleComodulePtr& M, const CompatibleAction& ca, int top);

/// Ψ = χ∘Ψ_{a,c} at degree n as a cochain on A^{⊗(n+1)}.
QVec psi(const CupSetting& s, int n, const QVec& phi, const QVec& y);
/// Ψ_{a,c}(φ ⊗ y)(f_0 ⊗ ... ⊗ f_n) = φ(m ⊗ f_0(c_0) ⊗ ... ⊗ f_n(c_n)).
Rational psi_convolution(const CupSetting& s, const ConvolutionAlgebra& B, int n, const QVec& phi, const QVec& y,
                         const std::vector<QMat>& fs);

/// Ψ agrees with the route through Hom_H(C, A), is independent of the
/// representative of m ⊗_H c̃ and commutes with all structure maps (n <= max_n).
CheckReport check_psi(const CupSetting& s, int max_n);

struct CupResult {
  int p = 0;
  int q = 0;
  QVec value;        // cochain on A^{⊗(p+q+1)}
  bool cocycle = false;
  bool cyclic = false;  // λ value = value
};

/// Ψ∘AW(φ ⊗ y) for a cocycle φ in C^p_H(A, M) and a cocycle y in C^q_H(C, M):
/// Ψ(d_{p+q}...d_{p+1} φ ⊗ ∂_0^p y). Throws a precondition error naming the
/// nonzero coboundary if an input is not a cocycle.
CupResult cup(const CupSetting& s, int p, const QVec& phi, int q, const QVec& y);

/// Cups every pair of basis cocycles at the given bidegrees and checks that
/// the results are cocycles.
CheckReport check_cup(const CupSetting& s, const std::vector<std::pair<int, int>>& bidegrees);

}  // namespace hopfcyc
