#include "hopfcyc/algebra.hpp"

#include "hopfcyc/errors.hpp"

#include <algorithm>

namespace hopfcyc {

AlgebraPtr Algebra::presented(std::string name, Alphabet alphabet, std::vector<RewriteRule> rules, int split) {
  auto a = std::shared_ptr<Algebra>(new Algebra());
  a->name_ = std::move(name);
  a->split_ = split;
  a->rules_ = RuleSet(std::move(alphabet), std::move(rules));
  a->unit_ = Terms{{Word{}, Rational(1)}};
  return a;
}

AlgebraPtr Algebra::space(std::string name, Alphabet alphabet, std::vector<Word> basis) {
  auto a = std::shared_ptr<Algebra>(new Algebra());
  a->name_ = std::move(name);
  a->rules_ = RuleSet(std::move(alphabet), {});
  a->has_product_ = false;
  a->finite_basis_ = std::move(basis);
  return a;
}

AlgebraPtr Algebra::finite(std::string name, Alphabet alphabet, std::vector<RewriteRule> rules,
                           std::vector<Word> basis, Terms unit) {
  auto a = std::shared_ptr<Algebra>(new Algebra());
  a->name_ = std::move(name);
  a->rules_ = RuleSet(std::move(alphabet), std::move(rules));
  a->unit_ = std::move(unit);
  a->finite_basis_ = std::move(basis);
  return a;
}

const std::vector<Word>& Algebra::finite_basis() const {
  if (!finite_basis_) structural_error("algebra " + name_ + " has no finite basis");
  return *finite_basis_;
}

Terms Algebra::normalize(const Terms& t) const { return rules_.normalize(t); }
Terms Algebra::normalize_word(const Word& w) const { return rules_.normalize_word(w); }

Terms Algebra::multiply(const Word& a, const Word& b) const {
  if (!has_product_) structural_error("space " + name_ + " has no product");
  return rules_.normalize_word(concat(a, b));
}

bool Algebra::is_normal(const Word& w) const { return rules_.is_normal(w); }

bool Algebra::valid_word(const Word& w) const {
  for (const auto& g : w)
    if (!alphabet().contains(g)) return false;
  return true;
}

std::vector<Word> Algebra::basis_up_to(int degree) const {
  if (finite_basis_) {
    std::vector<Word> b = *finite_basis_;
    std::sort(b.begin(), b.end(), [this](const Word& x, const Word& y) { return alphabet().canonical_less(x, y); });
    return b;
  }
  std::vector<Word> out;
  if (degree < 0) return out;
  out.push_back(Word{});
  const auto letters = alphabet().letters_up_to(degree);
  std::vector<Word> frontier{Word{}};
  // Normal words are closed under taking prefixes for the rewrite systems
  // used here (every redex of a prefix is a redex of the word).
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (const auto& g : letters) {
        Word nw = w;
        nw.push_back(g);
        if (alphabet().weight(nw) > degree) continue;
        if (!rules_.is_normal(nw)) continue;
        next.push_back(nw);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [this](const Word& x, const Word& y) { return alphabet().canonical_less(x, y); });
  return out;
}

std::pair<Word, Word> Algebra::split_word(const Word& w) const {
  std::size_t i = 0;
  while (i < w.size()) {
    const int f = alphabet().family_index(w[i]);
    if (f < 0 || f >= split_) break;
    ++i;
  }
  return {Word(w.begin(), w.begin() + static_cast<long>(i)), Word(w.begin() + static_cast<long>(i), w.end())};
}

std::string Algebra::format_word(const Word& w, bool pretty) const {
  if (split_ <= 0) return alphabet().format_word(w, pretty);
  auto [l, r] = split_word(w);
  return "(" + alphabet().format_word(l, pretty) + "▷◁" + alphabet().format_word(r, pretty) + ")";
}

// ---------------------------------------------------------------- AlgElt

AlgElt::AlgElt(AlgebraPtr alg, Terms terms, bool normalized) : alg_(std::move(alg)) {
  if (!alg_) structural_error("element without an algebra");
  for (const auto& [w, c] : terms)
    if (!alg_->valid_word(w))
      throw Error(ErrorKind::Semantic, "word " + alg_->alphabet().format_word(w, false) + " is not over " + alg_->name());
  terms_ = normalized ? std::move(terms) : alg_->normalize(terms);
}

AlgElt AlgElt::one(const AlgebraPtr& alg) {
  if (!alg->has_product()) structural_error("space " + alg->name() + " has no unit");
  return AlgElt(alg, alg->unit(), true);
}

AlgElt AlgElt::word(AlgebraPtr alg, const Word& w) { return AlgElt(std::move(alg), Terms{{w, Rational(1)}}); }

AlgElt AlgElt::gen(AlgebraPtr alg, const std::string& name, int index) {
  return word(std::move(alg), Word{Generator(name, index)});
}

AlgElt AlgElt::scalar(const AlgebraPtr& alg, const Rational& c) { return one(alg) * c; }

Rational AlgElt::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

namespace {
void same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a != b)
    structural_error("mismatched algebras: " + (a ? a->name() : std::string("?")) + " vs " +
                     (b ? b->name() : std::string("?")));
}
}  // namespace

AlgElt& AlgElt::operator+=(const AlgElt& o) {
  if (!alg_) alg_ = o.alg_;
  if (o.alg_) same_algebra(alg_, o.alg_);
  add_terms(terms_, o.terms_);
  return *this;
}

AlgElt& AlgElt::operator-=(const AlgElt& o) {
  if (!alg_) alg_ = o.alg_;
  if (o.alg_) same_algebra(alg_, o.alg_);
  add_terms(terms_, o.terms_, Rational(-1));
  return *this;
}

AlgElt& AlgElt::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

AlgElt AlgElt::operator-() const {
  AlgElt r = *this;
  r *= Rational(-1);
  return r;
}

AlgElt operator*(const AlgElt& a, const AlgElt& b) {
  same_algebra(a.alg_, b.alg_);
  Terms out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) add_terms(out, a.alg_->multiply(wa, wb), ca * cb);
  return AlgElt(a.alg_, std::move(out), true);
}

bool operator==(const AlgElt& a, const AlgElt& b) {
  if (a.alg_ && b.alg_) same_algebra(a.alg_, b.alg_);
  return a.terms_ == b.terms_;
}

std::string format_combination(const std::vector<std::pair<std::string, Rational>>& terms, bool pretty) {
  if (terms.empty()) return "0";
  const std::string minus = pretty ? "−" : "-";
  std::string out;
  bool first = true;
  for (const auto& [body, c] : terms) {
    const bool neg = c.sign() < 0;
    const Rational mag = c.abs();
    if (first) out += neg ? minus : "";
    else out += neg ? " " + minus + " " : " + ";
    first = false;
    if (mag.is_one()) {
      out += body;
    } else if (body == "1") {
      out += mag.str();
    } else if (pretty) {
      const bool digit = !body.empty() && body[0] >= '0' && body[0] <= '9';
      out += mag.str() + (digit ? "·" : "") + body;
    } else {
      out += mag.str() + " " + body;
    }
  }
  return out;
}

std::string AlgElt::str(bool pretty) const {
  if (!alg_) return "0";
  std::vector<Word> words;
  for (const auto& [w, c] : terms_) words.push_back(w);
  std::sort(words.begin(), words.end(), [this](const Word& x, const Word& y) { return alg_->alphabet().canonical_less(x, y); });
  std::vector<std::pair<std::string, Rational>> parts;
  for (const auto& w : words) parts.emplace_back(alg_->format_word(w, pretty), terms_.at(w));
  return format_combination(parts, pretty);
}

// ---------------------------------------------------------------- TensorElt

void add_term(TupleTerms& t, const std::vector<Word>& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

TensorElt::TensorElt(std::vector<AlgebraPtr> legs, TupleTerms terms) : legs_(std::move(legs)) {
  for (const auto& [ws, c] : terms) add(ws, c);
}

TensorElt TensorElt::scalar(const Rational& c) {
  TensorElt t;
  t.add({}, c);
  return t;
}

TensorElt TensorElt::basis(std::vector<AlgebraPtr> legs, const std::vector<Word>& words, const Rational& c) {
  TensorElt t(std::move(legs));
  t.add(words, c);
  return t;
}

Rational TensorElt::scalar_value() const {
  auto it = terms_.find({});
  return it == terms_.end() ? Rational(0) : it->second;
}

void TensorElt::add(const std::vector<Word>& w, const Rational& c) {
  if (w.size() != legs_.size()) structural_error("tensor term has the wrong number of legs");
  add_term(terms_, w, c);
}

void TensorElt::check_compatible(const TensorElt& o) const {
  if (legs_.size() != o.legs_.size()) structural_error("tensors with different leg counts");
  for (std::size_t i = 0; i < legs_.size(); ++i) same_algebra(legs_[i], o.legs_[i]);
}

TensorElt& TensorElt::operator+=(const TensorElt& o) {
  if (terms_.empty() && legs_.empty()) legs_ = o.legs_;
  if (o.terms_.empty() && o.legs_.empty()) return *this;
  check_compatible(o);
  for (const auto& [w, c] : o.terms_) add_term(terms_, w, c);
  return *this;
}

TensorElt& TensorElt::operator-=(const TensorElt& o) {
  if (terms_.empty() && legs_.empty()) legs_ = o.legs_;
  if (o.terms_.empty() && o.legs_.empty()) return *this;
  check_compatible(o);
  for (const auto& [w, c] : o.terms_) add_term(terms_, w, -c);
  return *this;
}

TensorElt& TensorElt::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

TensorElt TensorElt::operator-() const {
  TensorElt r = *this;
  r *= Rational(-1);
  return r;
}

TensorElt operator*(const TensorElt& a, const TensorElt& b) {
  a.check_compatible(b);
  TensorElt out(a.legs_);
  const std::size_t n = a.legs_.size();
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      // Expand the product leg by leg.
      std::vector<std::pair<std::vector<Word>, Rational>> acc{{{}, ca * cb}};
      for (std::size_t i = 0; i < n; ++i) {
        const Terms p = a.legs_[i]->multiply(wa[i], wb[i]);
        std::vector<std::pair<std::vector<Word>, Rational>> next;
        for (const auto& [pre, pc] : acc)
          for (const auto& [w, c] : p) {
            auto v = pre;
            v.push_back(w);
            next.emplace_back(std::move(v), pc * c);
          }
        acc = std::move(next);
      }
      for (const auto& [w, c] : acc) add_term(out.terms_, w, c);
    }
  return out;
}

bool operator==(const TensorElt& a, const TensorElt& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  a.check_compatible(b);
  return a.terms_ == b.terms_;
}

std::string TensorElt::str(bool pretty) const {
  std::vector<std::vector<Word>> keys;
  for (const auto& [w, c] : terms_) keys.push_back(w);
  std::sort(keys.begin(), keys.end(), [this](const std::vector<Word>& x, const std::vector<Word>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      const auto& A = legs_[i]->alphabet();
      if (A.canonical_less(x[i], y[i])) return true;
      if (A.canonical_less(y[i], x[i])) return false;
    }
    return false;
  });
  std::vector<std::pair<std::string, Rational>> parts;
  for (const auto& k : keys) {
    std::string body;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) body += pretty ? "⊗" : "⊗";
      body += legs_[i]->format_word(k[i], pretty);
    }
    if (k.empty()) body = "1";
    parts.emplace_back(body, terms_.at(k));
  }
  return format_combination(parts, pretty);
}

// ---------------------------------------------------------------- helpers

TensorElt tensor(const std::vector<AlgElt>& parts) {
  if (parts.empty()) structural_error("tensor of an empty sequence");
  std::vector<AlgebraPtr> legs;
  for (const auto& p : parts) {
    if (!p.algebra()) structural_error("tensor of an untyped element");
    legs.push_back(p.algebra());
  }
  TensorElt out(legs);
  std::vector<std::pair<std::vector<Word>, Rational>> acc{{{}, Rational(1)}};
  for (const auto& p : parts) {
    std::vector<std::pair<std::vector<Word>, Rational>> next;
    for (const auto& [pre, pc] : acc)
      for (const auto& [w, c] : p.terms()) {
        auto v = pre;
        v.push_back(w);
        next.emplace_back(std::move(v), pc * c);
      }
    acc = std::move(next);
  }
  for (const auto& [w, c] : acc) out.add(w, c);
  return out;
}

TensorElt tensor(const AlgElt& a, const AlgElt& b) { return tensor(std::vector<AlgElt>{a, b}); }

TensorElt tensor(const TensorElt& a, const TensorElt& b) {
  auto legs = a.leg_algebras();
  legs.insert(legs.end(), b.leg_algebras().begin(), b.leg_algebras().end());
  TensorElt out(legs);
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      auto w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  return out;
}

TensorElt as_tensor(const AlgElt& a) { return tensor(std::vector<AlgElt>{a}); }

TensorElt normalized_tensor(std::vector<AlgebraPtr> legs, const TupleTerms& raw) {
  TensorElt out(legs);
  for (const auto& [ws, c] : raw) {
    if (ws.size() != legs.size()) structural_error("tensor term has the wrong number of legs");
    std::vector<AlgElt> parts;
    for (std::size_t i = 0; i < ws.size(); ++i) parts.push_back(AlgElt::word(legs[i], ws[i]));
    if (parts.empty()) {
      out += TensorElt::scalar(c);
      continue;
    }
    out += c * tensor(parts);
  }
  return out;
}

AlgElt as_element(const TensorElt& t) {
  if (t.legs() != 1) structural_error("expected a one-leg tensor");
  Terms terms;
  for (const auto& [w, c] : t.terms()) add_term(terms, w[0], c);
  return AlgElt(t.leg_algebras()[0], std::move(terms), true);
}

LegMap leg_map(AlgebraPtr target, std::function<AlgElt(const Word&)> f) {
  LegMap m;
  m.out = {target};
  m.f = [f](const Word& w) { return as_tensor(f(w)); };
  return m;
}

LegMap leg_scalar(std::function<Rational(const Word&)> f) {
  LegMap m;
  m.f = [f](const Word& w) { return TensorElt::scalar(f(w)); };
  return m;
}

TensorElt leg_apply(const TensorElt& t, std::size_t leg, const LegMap& m) {
  if (leg >= t.legs()) structural_error("leg index out of range");
  std::vector<AlgebraPtr> legs;
  for (std::size_t i = 0; i < leg; ++i) legs.push_back(t.leg_algebras()[i]);
  legs.insert(legs.end(), m.out.begin(), m.out.end());
  for (std::size_t i = leg + 1; i < t.legs(); ++i) legs.push_back(t.leg_algebras()[i]);
  TensorElt out(legs);
  std::map<Word, TensorElt> memo;
  for (const auto& [ws, c] : t.terms()) {
    auto it = memo.find(ws[leg]);
    if (it == memo.end()) it = memo.emplace(ws[leg], m.f(ws[leg])).first;
    for (const auto& [img, ic] : it->second.terms()) {
      std::vector<Word> w(ws.begin(), ws.begin() + static_cast<long>(leg));
      w.insert(w.end(), img.begin(), img.end());
      w.insert(w.end(), ws.begin() + static_cast<long>(leg) + 1, ws.end());
      out.add(w, c * ic);
    }
  }
  return out;
}

TensorElt merge_legs(const TensorElt& t, std::size_t i) {
  if (i + 1 >= t.legs()) structural_error("merge_legs: leg index out of range");
  same_algebra(t.leg_algebras()[i], t.leg_algebras()[i + 1]);
  const auto& alg = t.leg_algebras()[i];
  std::vector<AlgebraPtr> legs = t.leg_algebras();
  legs.erase(legs.begin() + static_cast<long>(i) + 1);
  TensorElt out(legs);
  for (const auto& [ws, c] : t.terms()) {
    for (const auto& [w, pc] : alg->multiply(ws[i], ws[i + 1])) {
      std::vector<Word> nw = ws;
      nw[i] = w;
      nw.erase(nw.begin() + static_cast<long>(i) + 1);
      out.add(nw, c * pc);
    }
  }
  return out;
}

TensorElt permute_legs(const TensorElt& t, const std::vector<std::size_t>& perm) {
  if (perm.size() != t.legs()) structural_error("permute_legs: permutation size mismatch");
  std::vector<AlgebraPtr> legs;
  for (auto p : perm) legs.push_back(t.leg_algebras().at(p));
  TensorElt out(legs);
  for (const auto& [ws, c] : t.terms()) {
    std::vector<Word> nw;
    for (auto p : perm) nw.push_back(ws[p]);
    out.add(nw, c);
  }
  return out;
}

AlgElt apply_linear(const AlgElt& a, const AlgebraPtr& target, const std::function<AlgElt(const Word&)>& f) {
  AlgElt out = AlgElt::zero(target);
  for (const auto& [w, c] : a.terms()) out += c * f(w);
  return out;
}

TensorElt map_terms(const TensorElt& t, const std::vector<AlgebraPtr>& out_legs,
                    const std::function<TensorElt(const std::vector<Word>&)>& f) {
  TensorElt out(out_legs);
  for (const auto& [ws, c] : t.terms()) {
    TensorElt img = f(ws);
    if (img.is_zero()) continue;
    out += c * img;
  }
  return out;
}

}  // namespace hopfcyc
