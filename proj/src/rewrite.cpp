#include "hopfcyc/rewrite.hpp"

#include "hopfcyc/errors.hpp"

#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>

namespace hopfcyc {

std::optional<int> IndexExpr::eval(const Bindings& b) const {
  switch (kind) {
    case Kind::None: return std::nullopt;
    case Kind::Const: return value;
    case Kind::Var: {
      auto it = b.find(var);
      if (it == b.end()) throw Error(ErrorKind::Semantic, "unbound index variable '" + var + "'");
      return it->second + value;
    }
  }
  return std::nullopt;
}

Rational CoeffExpr::eval(const Bindings& b) const {
  if (var.empty()) return scale;
  auto it = b.find(var);
  if (it == b.end()) throw Error(ErrorKind::Semantic, "unbound coefficient variable '" + var + "'");
  return scale * Rational(it->second);
}

bool Condition::holds(const Bindings& b) const {
  auto it = b.find(var);
  if (it == b.end()) return false;
  const int l = it->second;
  const auto r = rhs.eval(b);
  if (!r) return false;
  switch (op) {
    case Op::Lt: return l < *r;
    case Op::Le: return l <= *r;
    case Op::Gt: return l > *r;
    case Op::Ge: return l >= *r;
    case Op::Eq: return l == *r;
    case Op::Ne: return l != *r;
  }
  return false;
}

std::string op_text(Condition::Op op) {
  switch (op) {
    case Condition::Op::Lt: return "<";
    case Condition::Op::Le: return "<=";
    case Condition::Op::Gt: return ">";
    case Condition::Op::Ge: return ">=";
    case Condition::Op::Eq: return "==";
    case Condition::Op::Ne: return "!=";
  }
  return "?";
}

bool RewriteRule::is_schema() const {
  for (const auto& p : lhs)
    if (p.index.kind == IndexExpr::Kind::Var) return true;
  return false;
}

Word instantiate(const std::vector<LetterPattern>& pats, const Bindings& b) {
  Word w;
  w.reserve(pats.size());
  for (const auto& p : pats) {
    const auto idx = p.index.eval(b);
    w.emplace_back(p.name, idx ? *idx : -1);
  }
  return w;
}

Terms instantiate(const std::vector<PatternTerm>& terms, const Bindings& b) {
  Terms out;
  for (const auto& t : terms) add_term(out, instantiate(t.word, b), t.coeff.eval(b));
  return out;
}

RuleSet::RuleSet(Alphabet alphabet, std::vector<RewriteRule> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  for (const auto& r : rules_) {
    if (r.lhs.size() < 1) throw Error(ErrorKind::Semantic, "rewrite rule with empty left-hand side");
    for (const auto& p : r.lhs)
      if (!alphabet_.find(p.name))
        throw Error(ErrorKind::Semantic, "rule uses unknown generator '" + p.name + "'");
  }
}

bool RuleSet::match_at(const RewriteRule& r, const Word& w, std::size_t pos, Bindings& b) const {
  if (pos + r.lhs.size() > w.size()) return false;
  b.clear();
  for (std::size_t i = 0; i < r.lhs.size(); ++i) {
    const auto& p = r.lhs[i];
    const auto& g = w[pos + i];
    if (p.name != g.name) return false;
    switch (p.index.kind) {
      case IndexExpr::Kind::None:
        if (g.indexed()) return false;
        break;
      case IndexExpr::Kind::Const:
        if (g.index != p.index.value) return false;
        break;
      case IndexExpr::Kind::Var: {
        if (!g.indexed()) return false;
        const int v = g.index - p.index.value;
        auto [it, inserted] = b.emplace(p.index.var, v);
        if (!inserted && it->second != v) return false;
        break;
      }
    }
  }
  for (const auto& c : r.conditions)
    if (!c.holds(b)) return false;
  if (r.is_schema() && !r.producer) {
    for (const auto& t : r.rhs)
      for (const auto& p : t.word) {
        const auto idx = p.index.eval(b);
        if (!alphabet_.contains(Generator(p.name, idx ? *idx : -1))) return false;
      }
  }
  return true;
}

Terms RuleSet::rhs_of(const RewriteRule& r, const Word& w, std::size_t pos, const Bindings& b) const {
  if (r.producer) {
    Word matched(w.begin() + static_cast<long>(pos), w.begin() + static_cast<long>(pos + r.lhs.size()));
    return r.producer(matched);
  }
  return instantiate(r.rhs, b);
}

std::optional<Match> RuleSet::find_redex(const Word& w) const {
  Bindings b;
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    for (std::size_t ri = 0; ri < rules_.size(); ++ri)
      if (match_at(rules_[ri], w, pos, b)) return Match{ri, pos, b};
  return std::nullopt;
}

std::vector<Match> RuleSet::all_matches(const Word& w) const {
  std::vector<Match> out;
  Bindings b;
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    for (std::size_t ri = 0; ri < rules_.size(); ++ri)
      if (match_at(rules_[ri], w, pos, b)) out.push_back(Match{ri, pos, b});
  return out;
}

Terms RuleSet::rewrite_at(const Word& w, const Match& m) const {
  const auto& r = rules_.at(m.rule);
  const Terms rep = rhs_of(r, w, m.pos, m.bindings);
  Word prefix(w.begin(), w.begin() + static_cast<long>(m.pos));
  Word suffix(w.begin() + static_cast<long>(m.pos + r.lhs.size()), w.end());
  Terms out;
  for (const auto& [mid, c] : rep) add_term(out, concat(concat(prefix, mid), suffix), c);
  return out;
}

std::size_t RuleSet::step_limit() {
  const char* env = std::getenv("HOPFCYC_STEP_LIMIT");
  if (env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

Terms RuleSet::normalize_word(const Word& w) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
  }
  // Greatest word first: every rewrite step produces smaller words, so each
  // word is expanded at most once.
  auto greater = [this](const Word& a, const Word& b) { return alphabet_.order_less(b, a); };
  std::map<Word, Rational, decltype(greater)> pending(greater);
  pending.emplace(w, Rational(1));
  Terms out;
  const std::size_t limit = step_limit();
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& cur = node.key();
    const Rational& c = node.mapped();
    if (c.is_zero()) continue;
    const auto m = find_redex(cur);
    if (!m) {
      add_term(out, cur, c);
      continue;
    }
    if (++steps > limit) {
      std::ostringstream os;
      os << "rewrite step limit " << limit << " exceeded while normalizing "
         << alphabet_.format_word(w, false) << " (rule order check failed or rules do not terminate)";
      throw Error(ErrorKind::NonTermination, os.str());
    }
    for (const auto& [nw, nc] : rewrite_at(cur, *m)) {
      auto [it, inserted] = pending.try_emplace(nw, nc * c);
      if (!inserted) it->second += nc * c;
    }
  }
  std::lock_guard<std::mutex> lock(mutex_);
  cache_.emplace(w, out);
  return out;
}

Terms RuleSet::normalize(const Terms& t) const {
  Terms out;
  for (const auto& [w, c] : t) add_terms(out, normalize_word(w), c);
  return out;
}

namespace {

void enumerate_lhs(const RuleSet& rs, const RewriteRule& r, const std::vector<Generator>& letters,
                   int max_weight, std::size_t i, Word& cur, Bindings& b, int weight,
                   const std::function<void(const Word&, const Bindings&)>& emit) {
  if (i == r.lhs.size()) {
    for (const auto& c : r.conditions)
      if (!c.holds(b)) return;
    emit(cur, b);
    return;
  }
  const auto& p = r.lhs[i];
  for (const auto& g : letters) {
    if (g.name != p.name) continue;
    const int wg = rs.alphabet().weight(g);
    if (weight + wg > max_weight) continue;
    Bindings nb = b;
    switch (p.index.kind) {
      case IndexExpr::Kind::None:
        if (g.indexed()) continue;
        break;
      case IndexExpr::Kind::Const:
        if (g.index != p.index.value) continue;
        break;
      case IndexExpr::Kind::Var: {
        const int v = g.index - p.index.value;
        auto [it, inserted] = nb.emplace(p.index.var, v);
        if (!inserted && it->second != v) continue;
        break;
      }
    }
    cur.push_back(g);
    enumerate_lhs(rs, r, letters, max_weight, i + 1, cur, nb, weight + wg, emit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::pair<Word, Terms>> rule_instances(const RuleSet& rs, int max_weight) {
  std::vector<std::pair<Word, Terms>> out;
  const auto letters = rs.alphabet().letters_up_to(max_weight);
  for (std::size_t ri = 0; ri < rs.rules().size(); ++ri) {
    const auto& r = rs.rules()[ri];
    Word cur;
    Bindings b;
    enumerate_lhs(rs, r, letters, max_weight, 0, cur, b, 0, [&](const Word& w, const Bindings&) {
      for (const auto& m : rs.all_matches(w))
        if (m.rule == ri && m.pos == 0) {
          out.emplace_back(w, rs.rewrite_at(w, m));
          break;
        }
    });
  }
  return out;
}

RuleDiagnostics validate_ruleset(const RuleSet& rs, int degree, int index_bound) {
  RuleDiagnostics d;
  const auto& A = rs.alphabet();
  // Termination order on instances.
  const int inst_weight = std::max(index_bound + 2, degree);
  for (const auto& [lhs, rhs] : rule_instances(rs, inst_weight)) {
    ++d.instances_checked;
    for (const auto& [w, c] : rhs) {
      if (!A.order_less(w, lhs)) {
        d.order_violations.push_back(A.format_word(lhs, false) + " -> " + A.format_word(w, false) +
                                     " does not decrease in the termination order");
        break;
      }
    }
  }
  for (const auto& r : rs.rules()) {
    // A rule that cannot be instantiated within the bound still needs a
    // direct check when it has no variables.
    if (!r.is_schema() && !r.producer) {
      Word lhs = instantiate(r.lhs, {});
      bool seen = false;
      for (const auto& v : d.order_violations)
        if (v.rfind(A.format_word(lhs, false) + " ->", 0) == 0) seen = true;
      if (seen) continue;
      for (const auto& [w, c] : instantiate(r.rhs, {}))
        if (!A.order_less(w, lhs)) {
          d.order_violations.push_back(A.format_word(lhs, false) + " -> " + A.format_word(w, false) +
                                       " does not decrease in the termination order");
          break;
        }
    }
  }
  if (!d.order_violations.empty()) return d;

  // Confluence on all words of weight <= degree.
  const auto letters = A.letters_up_to(degree);
  std::vector<Word> frontier{Word{}};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (const auto& g : letters) {
        Word nw = w;
        nw.push_back(g);
        if (A.weight(nw) > degree) continue;
        next.push_back(nw);
        const auto ms = rs.all_matches(nw);
        if (ms.size() < 2) continue;
        ++d.overlaps_checked;
        const Terms first = rs.normalize(rs.rewrite_at(nw, ms[0]));
        for (std::size_t i = 1; i < ms.size(); ++i) {
          const Terms other = rs.normalize(rs.rewrite_at(nw, ms[i]));
          if (other != first) {
            d.non_confluent.push_back(A.format_word(nw, false));
            break;
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return d;
}

}  // namespace hopfcyc
