#pragma once

#include "hopfcyc/hopf.hpp"

#include <functional>
#include <memory>
#include <string>

namespace hopfcyc {

/// The one-dimensional algebra k (single basis word: the empty word).
AlgebraPtr ground_field();

/// Left H-action on a space, given on basis words.
struct LeftModule {
  std::string name;
  HopfPtr H;
  AlgebraPtr V;
  std::function<AlgElt(const Word& h, const Word& v)> act_word;

  AlgElt act(const AlgElt& h, const AlgElt& v) const;
  AlgElt act(const Word& h, const AlgElt& v) const;
  /// h·(v_0 ⊗ ... ⊗ v_k) = h(1)v_0 ⊗ ... ⊗ h(k+1)v_k on legs [first, end).
  TensorElt act_diag(const Word& h, const TensorElt& t, std::size_t first = 0) const;
  TensorElt act_diag(const AlgElt& h, const TensorElt& t, std::size_t first = 0) const;
};

/// H-module coalgebra: Δ and ε are H-linear.
struct ModuleCoalgebra : LeftModule {
  CoalgebraPtr C;
};
using ModuleCoalgebraPtr = std::shared_ptr<const ModuleCoalgebra>;

/// H-module algebra: h(ab) = (h(1)a)(h(2)b), h1 = ε(h)1.
struct ModuleAlgebra : LeftModule {};
using ModuleAlgebraPtr = std::shared_ptr<const ModuleAlgebra>;

/// Right H-module, left H-comodule m ↦ m<-1> ⊗ m<0> (legs H, M).
struct ModuleComodule {
  std::string name;
  HopfPtr H;
  AlgebraPtr M;
  std::function<AlgElt(const Word& m, const Word& h)> act_word;
  std::function<TensorElt(const Word& m)> coact_word;
  bool trivial_action = false;
  bool trivial_coaction = false;

  AlgElt act(const AlgElt& m, const AlgElt& h) const;
  AlgElt act(const AlgElt& m, const Word& h) const;
  TensorElt coact(const AlgElt& m) const;
  /// Applies the right action to leg `leg` by h.
  TensorElt act_leg(const TensorElt& t, std::size_t leg, const Word& h) const;
};
using ModuleComodulePtr = std::shared_ptr<const ModuleComodule>;

/// H acting on itself by left multiplication, as a module coalgebra.
ModuleCoalgebraPtr regular_module_coalgebra(const HopfPtr& H);
/// k with m·h = ε(h)m and m ↦ 1⊗m.
ModuleComodulePtr trivial_coefficients(const HopfPtr& H);
/// k with m·h = δ(h)m and m ↦ σ⊗m.
ModuleComodulePtr character_coefficients(const HopfPtr& H, const Character& delta, const AlgElt& sigma,
                                         const std::string& name);
/// M = H with right multiplication and the trivial coaction.
ModuleComodulePtr regular_right_module(const HopfPtr& H);
/// M = H with the trivial action and the coaction Δ.
ModuleComodulePtr coregular_comodule(const HopfPtr& H);

/// Module and coalgebra-map axioms on basis words of weight <= degree.
CheckReport validate_module_coalgebra(const ModuleCoalgebra& C, int degree);
CheckReport validate_module_algebra(const ModuleAlgebra& A, int degree);
CheckReport validate_module_comodule(const ModuleComodule& M, int degree);

}  // namespace hopfcyc
