#pragma once

#include "hopfcyc/word.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace hopfcyc {

using Bindings = std::map<std::string, int>;

/// Index part of a letter pattern: absent, a constant, or var+offset.
struct IndexExpr {
  enum class Kind { None, Const, Var };
  Kind kind = Kind::None;
  int value = 0;  // the constant, or the offset added to var
  std::string var;

  static IndexExpr none() { return {}; }
  static IndexExpr constant(int v) { return {Kind::Const, v, {}}; }
  static IndexExpr variable(std::string v, int offset = 0) { return {Kind::Var, offset, std::move(v)}; }
  std::optional<int> eval(const Bindings& b) const;
  bool operator==(const IndexExpr&) const = default;
};

struct LetterPattern {
  std::string name;
  IndexExpr index;
  bool operator==(const LetterPattern&) const = default;
};

/// Coefficient scale * var (or just scale when var is empty).
struct CoeffExpr {
  Rational scale{1};
  std::string var;
  Rational eval(const Bindings& b) const;
  bool operator==(const CoeffExpr&) const = default;
};

struct PatternTerm {
  CoeffExpr coeff;
  std::vector<LetterPattern> word;
  bool operator==(const PatternTerm&) const = default;
};

struct Condition {
  enum class Op { Lt, Le, Gt, Ge, Eq, Ne };
  std::string var;
  Op op = Op::Gt;
  IndexExpr rhs;
  bool holds(const Bindings& b) const;
  bool operator==(const Condition&) const = default;
};

std::string op_text(Condition::Op op);

struct RewriteRule {
  std::vector<LetterPattern> lhs;
  std::vector<PatternTerm> rhs;
  std::vector<Condition> conditions;
  /// Programmatic right-hand side: receives the matched letters. Takes
  /// precedence over `rhs` when set.
  std::function<Terms(const Word&)> producer;
  std::string label;

  bool is_schema() const;
  /// Equality of the declarative data (producers are not compared).
  bool same_data(const RewriteRule& o) const {
    return lhs == o.lhs && rhs == o.rhs && conditions == o.conditions;
  }
};

struct Match {
  std::size_t rule = 0;
  std::size_t pos = 0;
  Bindings bindings;
};

Word instantiate(const std::vector<LetterPattern>& pats, const Bindings& b);
Terms instantiate(const std::vector<PatternTerm>& terms, const Bindings& b);

/// Rewrite system over an alphabet. Normal forms are computed by repeatedly
/// rewriting the leftmost redex; the result is cached per input word.
class RuleSet {
 public:
  RuleSet() = default;
  RuleSet(Alphabet alphabet, std::vector<RewriteRule> rules);
  RuleSet(const RuleSet& o) : alphabet_(o.alphabet_), rules_(o.rules_) {}
  RuleSet& operator=(const RuleSet& o) {
    if (this != &o) {
      alphabet_ = o.alphabet_;
      rules_ = o.rules_;
      std::lock_guard<std::mutex> lock(mutex_);
      cache_.clear();
    }
    return *this;
  }

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }

  std::optional<Match> find_redex(const Word& w) const;
  std::vector<Match> all_matches(const Word& w) const;
  /// One rewrite step at the given match.
  Terms rewrite_at(const Word& w, const Match& m) const;
  bool is_normal(const Word& w) const { return !find_redex(w).has_value(); }

  Terms normalize_word(const Word& w) const;
  Terms normalize(const Terms& t) const;

  /// Rewrite steps allowed per normalize call (HOPFCYC_STEP_LIMIT, default 10^6).
  static std::size_t step_limit();

 private:
  bool match_at(const RewriteRule& r, const Word& w, std::size_t pos, Bindings& b) const;
  Terms rhs_of(const RewriteRule& r, const Word& w, std::size_t pos, const Bindings& b) const;

  Alphabet alphabet_;
  std::vector<RewriteRule> rules_;
  mutable std::mutex mutex_;
  mutable std::map<Word, Terms> cache_;
};

struct RuleDiagnostics {
  std::vector<std::string> order_violations;
  std::vector<std::string> non_confluent;
  std::size_t instances_checked = 0;
  std::size_t overlaps_checked = 0;
  bool ok() const { return order_violations.empty() && non_confluent.empty(); }
};

/// Termination-order check on rule instances with indices up to index_bound,
/// and a confluence check: every word of weight at most `degree` with two or
/// more redexes must reach the same normal form from each one-step rewrite.
RuleDiagnostics validate_ruleset(const RuleSet& rs, int degree = 4, int index_bound = 6);

/// Enumerates every instance (lhs word, rhs terms) of the rules with letters
/// of weight at most `max_weight` in the lhs.
std::vector<std::pair<Word, Terms>> rule_instances(const RuleSet& rs, int max_weight);

}  // namespace hopfcyc
