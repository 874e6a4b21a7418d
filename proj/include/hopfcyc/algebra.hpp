#pragma once

#include "hopfcyc/rewrite.hpp"
#include "hopfcyc/word.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopfcyc {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A vector space with a distinguished basis of words, optionally carrying an
/// associative product given by concatenation followed by normalization.
class Algebra {
 public:
  /// Presented algebra: product = concatenation + normal form; unit = empty word.
  /// `split` > 0 prints words as (L▷◁R) with L the letters of the first
  /// `split` families.
  static AlgebraPtr presented(std::string name, Alphabet alphabet, std::vector<RewriteRule> rules, int split = 0);
  /// Finite-dimensional space without a product; the basis words are given.
  static AlgebraPtr space(std::string name, Alphabet alphabet, std::vector<Word> basis);
  /// Finite-dimensional algebra whose basis is closed under the rules; the
  /// unit is the given combination (e.g. the sum of idempotents).
  static AlgebraPtr finite(std::string name, Alphabet alphabet, std::vector<RewriteRule> rules,
                           std::vector<Word> basis, Terms unit);

  const std::string& name() const { return name_; }
  const Alphabet& alphabet() const { return rules_.alphabet(); }
  const RuleSet& rules() const { return rules_; }
  bool has_product() const { return has_product_; }
  const Terms& unit() const { return unit_; }

  /// Number of leading families printed left of "▷◁" (0: plain printing).
  int split() const { return split_; }

  bool is_finite() const { return finite_basis_.has_value(); }
  const std::vector<Word>& finite_basis() const;

  Terms normalize(const Terms& t) const;
  Terms normalize_word(const Word& w) const;
  Terms multiply(const Word& a, const Word& b) const;
  bool is_normal(const Word& w) const;
  bool valid_word(const Word& w) const;

  /// Normal words of weight at most `degree`, in printing order. For finite
  /// spaces the degree is ignored and the whole basis is returned.
  std::vector<Word> basis_up_to(int degree) const;

  /// Splits a word at the first letter outside the leading `split()` families.
  std::pair<Word, Word> split_word(const Word& w) const;
  std::string format_word(const Word& w, bool pretty) const;

 private:
  Algebra() = default;

  std::string name_;
  RuleSet rules_;
  bool has_product_ = true;
  Terms unit_;
  int split_ = 0;
  std::optional<std::vector<Word>> finite_basis_;
};

/// Element of an algebra, always stored in normal form.
class AlgElt {
 public:
  AlgElt() = default;
  AlgElt(AlgebraPtr alg, Terms terms, bool normalized = false);

  static AlgElt zero(AlgebraPtr alg) { return AlgElt(std::move(alg), {}, true); }
  static AlgElt one(const AlgebraPtr& alg);
  static AlgElt word(AlgebraPtr alg, const Word& w);
  static AlgElt gen(AlgebraPtr alg, const std::string& name, int index = -1);
  static AlgElt scalar(const AlgebraPtr& alg, const Rational& c);

  const AlgebraPtr& algebra() const { return alg_; }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Word& w) const;

  AlgElt& operator+=(const AlgElt& o);
  AlgElt& operator-=(const AlgElt& o);
  AlgElt& operator*=(const Rational& c);
  friend AlgElt operator+(AlgElt a, const AlgElt& b) { return a += b; }
  friend AlgElt operator-(AlgElt a, const AlgElt& b) { return a -= b; }
  AlgElt operator-() const;
  friend AlgElt operator*(const Rational& c, AlgElt a) { return a *= c; }
  friend AlgElt operator*(AlgElt a, const Rational& c) { return a *= c; }
  friend AlgElt operator*(const AlgElt& a, const AlgElt& b);
  friend bool operator==(const AlgElt& a, const AlgElt& b);

  /// Canonical text ("d[1] X + 2 d[2]") or pretty text ("δ₁X + 2δ₂").
  std::string str(bool pretty = false) const;

 private:
  AlgebraPtr alg_;
  Terms terms_;
};

using TupleTerms = std::map<std::vector<Word>, Rational>;
void add_term(TupleTerms& t, const std::vector<Word>& w, const Rational& c);

/// Element of a tensor product of algebras. A tensor with zero legs is a scalar.
class TensorElt {
 public:
  TensorElt() = default;
  explicit TensorElt(std::vector<AlgebraPtr> legs) : legs_(std::move(legs)) {}
  TensorElt(std::vector<AlgebraPtr> legs, TupleTerms terms);

  static TensorElt scalar(const Rational& c);
  static TensorElt basis(std::vector<AlgebraPtr> legs, const std::vector<Word>& words,
                         const Rational& c = Rational(1));

  std::size_t legs() const { return legs_.size(); }
  const std::vector<AlgebraPtr>& leg_algebras() const { return legs_; }
  const TupleTerms& terms() const& { return terms_; }
  TupleTerms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of the empty tuple (the scalar value of a zero-leg tensor).
  Rational scalar_value() const;

  void add(const std::vector<Word>& w, const Rational& c);
  TensorElt& operator+=(const TensorElt& o);
  TensorElt& operator-=(const TensorElt& o);
  TensorElt& operator*=(const Rational& c);
  friend TensorElt operator+(TensorElt a, const TensorElt& b) { return a += b; }
  friend TensorElt operator-(TensorElt a, const TensorElt& b) { return a -= b; }
  friend TensorElt operator*(const Rational& c, TensorElt a) { return a *= c; }
  TensorElt operator-() const;
  /// Leg-wise product (legs must agree).
  friend TensorElt operator*(const TensorElt& a, const TensorElt& b);
  friend bool operator==(const TensorElt& a, const TensorElt& b);

  std::string str(bool pretty = false) const;

 private:
  void check_compatible(const TensorElt& o) const;

  std::vector<AlgebraPtr> legs_;
  TupleTerms terms_;
};

/// Multilinear tensor of a non-empty sequence of elements.
TensorElt tensor(const std::vector<AlgElt>& parts);
TensorElt tensor(const AlgElt& a, const AlgElt& b);
/// Concatenates the legs of two tensors.
TensorElt tensor(const TensorElt& a, const TensorElt& b);
TensorElt as_tensor(const AlgElt& a);
/// Builds a tensor from arbitrary (not necessarily normal) word tuples.
TensorElt normalized_tensor(std::vector<AlgebraPtr> legs, const TupleTerms& raw);
/// Interprets a one-leg tensor as an element.
AlgElt as_element(const TensorElt& t);

/// A linear map on basis words: replaces one leg by zero or more legs.
struct LegMap {
  std::vector<AlgebraPtr> out;
  std::function<TensorElt(const Word&)> f;
};

LegMap leg_map(AlgebraPtr target, std::function<AlgElt(const Word&)> f);
LegMap leg_scalar(std::function<Rational(const Word&)> f);

/// Applies `m` to leg `leg` (zero-based) of every term.
TensorElt leg_apply(const TensorElt& t, std::size_t leg, const LegMap& m);
/// Multiplies legs i and i+1 into one leg.
TensorElt merge_legs(const TensorElt& t, std::size_t i);
/// Reorders legs: output leg k is input leg perm[k].
TensorElt permute_legs(const TensorElt& t, const std::vector<std::size_t>& perm);
/// Linear extension of a word map to elements.
AlgElt apply_linear(const AlgElt& a, const AlgebraPtr& target, const std::function<AlgElt(const Word&)>& f);
/// Applies a function to every term of a tensor (word tuple -> tensor).
TensorElt map_terms(const TensorElt& t, const std::vector<AlgebraPtr>& out,
                    const std::function<TensorElt(const std::vector<Word>&)>& f);

/// Printing of combinations given term order and formatter.
std::string format_combination(const std::vector<std::pair<std::string, Rational>>& terms, bool pretty);

}  // namespace hopfcyc
