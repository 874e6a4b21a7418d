#pragma once

#include "hopfcyc/hopf.hpp"
#include "hopfcyc/modules.hpp"
#include "hopfcyc/presentation.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace hopfcyc {

HopfPtr build_h1cop();
/// Commutative Hopf algebra on the δ_k with the coproduct and antipode they
/// have inside H1cop.
HopfPtr build_F(const HopfPtr& h1cop);
/// Enveloping algebra of the Lie algebra [Y, X] = X (primitive generators).
HopfSpec u_spec();
HopfPtr build_U();

/// Generator data of a matched pair: the left action u ▹ f of U on F and the
/// left coaction ∇(u) = u<0> ⊗ u<1> of F on U (legs U, F).
struct MatchedPairData {
  std::string name;
  HopfPtr F;
  HopfPtr U;
  std::function<Terms(const Generator& u, const Generator& f)> action;
  std::function<TupleTerms(const Generator& u)> coaction;
};

/// A matched pair with the action and coaction extended to all words.
class MatchedPair {
 public:
  explicit MatchedPair(MatchedPairData d);

  const std::string& name() const { return d_.name; }
  const HopfPtr& F() const { return d_.F; }
  const HopfPtr& U() const { return d_.U; }

  AlgElt gen_act(const Generator& u, const Generator& f) const;
  TensorElt gen_coact(const Generator& u) const;
  /// u ▹ f, by (lu') ▹ f = l ▹ (u' ▹ f) and l ▹ (f'f'') = (l(1) ▹ f')(l(2) ▹ f'').
  AlgElt act(const Word& u, const Word& f) const;
  AlgElt act(const AlgElt& u, const AlgElt& f) const;
  /// ∇(uv) = u(1)<0> v<0> ⊗ u(1)<1> (u(2) ▹ v<1>), ∇(1) = 1 ⊗ 1.
  TensorElt coact(const Word& u) const;
  TensorElt coact(const AlgElt& u) const;

 private:
  MatchedPairData d_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<Word, Word>, AlgElt> act_cache_;
  mutable std::map<Word, TensorElt> coact_cache_;
};
using MatchedPairPtr = std::shared_ptr<const MatchedPair>;

MatchedPairData h1cop_matched_pair_data(const HopfPtr& F, const HopfPtr& U);

/// The matched-pair conditions on pairs of basis words of weight <= degree,
/// plus compatibility of the action and coaction with the relations.
CheckReport check_matched_pair(const MatchedPair& mp, int degree);

/// F ▷◁ U: letters of F followed by letters of U; the product rule
/// u f -> (u(1) ▹ f) u(2) is installed as rewrite rules.
HopfPtr build_bicrossed(const MatchedPairPtr& mp);

/// Compares Δ, ε, S of two presentations over the same alphabet on all normal
/// words of weight <= degree (identifying words letter by letter).
CheckReport check_same_structure(const HopfAlgebra& a, const HopfAlgebra& b, int degree);

/// The built-in objects around H1cop, constructed once.
struct Builtins {
  HopfPtr h1cop;
  HopfPtr F;
  HopfPtr U;
  MatchedPairPtr pair;
  HopfPtr B;  // F ▷◁ U
  /// U as a B-module coalgebra: (f ▷◁ u) v = ε(f) u v.
  ModuleCoalgebraPtr U_module;
  /// F as a B-module algebra: (f ▷◁ u) g = ε(f) (u ▹ g).
  ModuleAlgebraPtr F_module;
};
const Builtins& builtins();

/// A finite group acting on a finite set.
struct GroupSetData {
  std::string name = "group";
  std::vector<std::string> elements;  // element 0 is the identity
  std::vector<std::vector<int>> mult;  // mult[g][h] = gh
  std::vector<std::string> set;
  std::vector<std::vector<int>> action;  // action[g][x] = g·x
  bool normal = false;
  std::string coefficients = "trivial";  // coefficient choice for cohomology runs
};

/// Throws a semantic error for an invalid table; checks normality when flagged.
void validate_group_set(const GroupSetData& gs);
GroupSetData parse_group_set(const std::string& json_text);
GroupSetData load_group_set(const std::string& path);
/// ℤ/2 acting on {a, b} by swapping.
GroupSetData swap_instance();

struct GroupInstance {
  GroupSetData data;
  HopfPtr G;  // group algebra
  AlgebraPtr X;  // set space, basis x[i]
  std::shared_ptr<const SetCoalgebra> CX;
  ModuleCoalgebraPtr CX_module;
  /// Functions on X (idempotents e[x]) with g·e[x] = e[g·x].
  ModuleAlgebraPtr FunX;

  Word element(int g) const;
  int element_of(const Word& w) const;
  Word point(int x) const;
  int point_of(const Word& w) const;
  int inverse(int g) const;
};
GroupInstance build_group_instance(const GroupSetData& gs);
/// S3 acting on three points.
GroupSetData s3_instance();
/// "trivial": k with ε-action; "regular": k[G] with g -> g ⊗ g and trivial
/// action; "conjugation": k[G] with m h = h^-1 m h and m -> m ⊗ m.
ModuleComodulePtr group_coefficients(const GroupInstance& gi, const std::string& kind);

}  // namespace hopfcyc
