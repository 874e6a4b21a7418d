#pragma once

#include "hopfcyc/algebra.hpp"
#include "hopfcyc/verdict.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace hopfcyc {

/// Coalgebra structure on the basis words of a space.
class Coalgebra {
 public:
  virtual ~Coalgebra() = default;
  virtual const AlgebraPtr& space() const = 0;
  virtual TensorElt coproduct_word(const Word& w) const = 0;
  virtual Rational counit_word(const Word& w) const = 0;
  virtual std::string name() const { return space()->name(); }

  TensorElt coproduct(const AlgElt& a) const;
  Rational counit(const AlgElt& a) const;
  /// Iterated coproduct into `parts` legs, always expanding the first leg.
  TensorElt sweedler(const AlgElt& a, int parts) const;
  /// Same, always expanding the last leg (coassociativity makes them agree).
  TensorElt sweedler_right(const AlgElt& a, int parts) const;

  LegMap delta_map() const;
  LegMap counit_map() const;
};
using CoalgebraPtr = std::shared_ptr<const Coalgebra>;

/// Coalgebra in which every basis word is group-like.
class SetCoalgebra : public Coalgebra {
 public:
  explicit SetCoalgebra(AlgebraPtr space) : space_(std::move(space)) {}
  const AlgebraPtr& space() const override { return space_; }
  TensorElt coproduct_word(const Word& w) const override;
  Rational counit_word(const Word&) const override { return Rational(1); }

 private:
  AlgebraPtr space_;
};

/// Structure-map values on one generator. Terms may be non-normal.
struct GeneratorData {
  std::optional<TupleTerms> coproduct;
  std::optional<Rational> counit;
  std::optional<Terms> antipode;
  std::optional<Terms> antipode_inverse;
};
/// Receives the Hopf algebra being built so tables may be derived from other
/// generators.
using GeneratorProvider = std::function<GeneratorData(const class HopfAlgebra&, const Generator&)>;

/// Hopf algebra by presentation: Δ, ε multiplicative and S anti-multiplicative
/// extensions of generator tables.
class HopfAlgebra : public Coalgebra {
 public:
  HopfAlgebra(std::string name, AlgebraPtr alg, GeneratorProvider provider);

  std::string name() const override { return name_; }
  const AlgebraPtr& algebra() const { return alg_; }
  const AlgebraPtr& space() const override { return alg_; }

  TensorElt coproduct_word(const Word& w) const override;
  Rational counit_word(const Word& w) const override;
  AlgElt antipode_word(const Word& w) const;
  AlgElt antipode_inverse_word(const Word& w) const;

  AlgElt antipode(const AlgElt& a) const;
  AlgElt antipode_inverse(const AlgElt& a) const;
  /// S^k for any integer k (negative powers use S^-1).
  AlgElt antipode_power(const AlgElt& a, int k) const;

  TensorElt gen_coproduct(const Generator& g) const;
  Rational gen_counit(const Generator& g) const;
  AlgElt gen_antipode(const Generator& g) const;
  AlgElt gen_antipode_inverse(const Generator& g) const;
  /// True when the inverse antipode of g comes from a table (not solved for).
  bool has_inverse_table(const Generator& g) const;

  AlgElt elt(const Word& w) const { return AlgElt::word(alg_, w); }
  AlgElt one() const { return AlgElt::one(alg_); }
  LegMap antipode_map() const;

  /// Extra weight allowed in the ansatz when solving S(x) = g.
  int inverse_slack = 1;

 private:
  const GeneratorData& data(const Generator& g) const;
  AlgElt solve_inverse(const Generator& g) const;

  std::string name_;
  AlgebraPtr alg_;
  GeneratorProvider provider_;
  mutable std::mutex mutex_;
  mutable std::map<Generator, GeneratorData> gen_cache_;
  mutable std::map<Word, TensorElt> delta_cache_;
  mutable std::map<Word, AlgElt> s_cache_;
  mutable std::map<Generator, AlgElt> sinv_cache_;
};
using HopfPtr = std::shared_ptr<const HopfAlgebra>;

/// Algebra character given on generators.
struct Character {
  std::string name;
  std::function<Rational(const Generator&)> on_generator;

  Rational operator()(const Word& w) const;
  Rational operator()(const AlgElt& a) const;
  /// Multiplicativity on relation instances up to the given weight.
  Verdict validate(const HopfAlgebra& H, int degree) const;
};

Character counit_character(const HopfPtr& H);

struct GroupLike {
  AlgElt element;
  Verdict validate(const HopfAlgebra& H) const;
};

/// Coassociativity, counit, antipode on all normal words of weight <= degree,
/// plus compatibility of Δ, ε, S with the rewrite rules.
CheckReport verify_hopf_axioms(const HopfAlgebra& H, int degree);
/// ε∘S = ε, Δ∘S = (S⊗S)∘flip∘Δ, S(ab) = S(b)S(a) on basis words / pairs.
CheckReport check_antipode_properties(const HopfAlgebra& H, int degree);

/// m ∘ (f ⊗ g) applied to a two-leg tensor over H.
AlgElt multiply_legs(const TensorElt& t);

}  // namespace hopfcyc
