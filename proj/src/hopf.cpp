#include "hopfcyc/hopf.hpp"

#include "hopfcyc/errors.hpp"
#include "hopfcyc/linalg.hpp"

#include <set>

namespace hopfcyc {

// ---------------------------------------------------------------- Coalgebra

TensorElt Coalgebra::coproduct(const AlgElt& a) const {
  TensorElt out({space(), space()});
  for (const auto& [w, c] : a.terms()) out += c * coproduct_word(w);
  return out;
}

Rational Coalgebra::counit(const AlgElt& a) const {
  Rational r(0);
  for (const auto& [w, c] : a.terms()) r += c * counit_word(w);
  return r;
}

LegMap Coalgebra::delta_map() const {
  LegMap m;
  m.out = {space(), space()};
  m.f = [this](const Word& w) { return coproduct_word(w); };
  return m;
}

LegMap Coalgebra::counit_map() const {
  return leg_scalar([this](const Word& w) { return counit_word(w); });
}

TensorElt Coalgebra::sweedler(const AlgElt& a, int parts) const {
  if (parts < 1) structural_error("sweedler needs at least one part");
  TensorElt t = as_tensor(a);
  for (int k = 1; k < parts; ++k) t = leg_apply(t, 0, delta_map());
  return t;
}

TensorElt Coalgebra::sweedler_right(const AlgElt& a, int parts) const {
  if (parts < 1) structural_error("sweedler needs at least one part");
  TensorElt t = as_tensor(a);
  for (int k = 1; k < parts; ++k) t = leg_apply(t, t.legs() - 1, delta_map());
  return t;
}

TensorElt SetCoalgebra::coproduct_word(const Word& w) const {
  return TensorElt::basis({space_, space_}, {w, w});
}

// ---------------------------------------------------------------- HopfAlgebra

HopfAlgebra::HopfAlgebra(std::string name, AlgebraPtr alg, GeneratorProvider provider)
    : name_(std::move(name)), alg_(std::move(alg)), provider_(std::move(provider)) {
  if (!alg_->has_product()) structural_error("Hopf algebra " + name_ + " needs an algebra");
}

const GeneratorData& HopfAlgebra::data(const Generator& g) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = gen_cache_.find(g);
    if (it != gen_cache_.end()) return it->second;
  }
  if (!alg_->alphabet().contains(g))
    throw Error(ErrorKind::Semantic, "unknown generator " + alg_->alphabet().format_letter(g, false) + " in " + name_);
  GeneratorData d = provider_(*this, g);
  std::lock_guard<std::mutex> lock(mutex_);
  return gen_cache_.emplace(g, std::move(d)).first->second;
}

TensorElt HopfAlgebra::gen_coproduct(const Generator& g) const {
  const auto& d = data(g);
  if (!d.coproduct)
    throw Error(ErrorKind::Semantic, "no coproduct for " + alg_->alphabet().format_letter(g, false) + " in " + name_);
  return normalized_tensor({alg_, alg_}, *d.coproduct);
}

Rational HopfAlgebra::gen_counit(const Generator& g) const {
  const auto& d = data(g);
  if (!d.counit)
    throw Error(ErrorKind::Semantic, "no counit for " + alg_->alphabet().format_letter(g, false) + " in " + name_);
  return *d.counit;
}

AlgElt HopfAlgebra::gen_antipode(const Generator& g) const {
  const auto& d = data(g);
  if (!d.antipode)
    throw Error(ErrorKind::Semantic, "no antipode for " + alg_->alphabet().format_letter(g, false) + " in " + name_);
  return AlgElt(alg_, *d.antipode);
}

bool HopfAlgebra::has_inverse_table(const Generator& g) const { return data(g).antipode_inverse.has_value(); }

AlgElt HopfAlgebra::gen_antipode_inverse(const Generator& g) const {
  const auto& d = data(g);
  if (d.antipode_inverse) return AlgElt(alg_, *d.antipode_inverse);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = sinv_cache_.find(g);
    if (it != sinv_cache_.end()) return it->second;
  }
  AlgElt r = solve_inverse(g);
  std::lock_guard<std::mutex> lock(mutex_);
  sinv_cache_.emplace(g, r);
  return r;
}

AlgElt HopfAlgebra::solve_inverse(const Generator& g) const {
  const int degree = alg_->alphabet().weight(g) + inverse_slack;
  const auto basis = alg_->basis_up_to(degree);
  std::map<Word, Index> rows;
  std::vector<AlgElt> images;
  for (const auto& b : basis) {
    images.push_back(antipode_word(b));
    for (const auto& [w, c] : images.back().terms()) rows.emplace(w, 0);
  }
  const Word target{g};
  rows.emplace(target, 0);
  Index r = 0;
  for (auto& [w, idx] : rows) idx = r++;
  QMat A = zeros<Rational>(r, static_cast<Index>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [w, c] : images[j].terms()) A(rows.at(w), static_cast<Index>(j)) = c;
  QVec b(r);
  for (Index i = 0; i < r; ++i) b(i) = Rational(0);
  b(rows.at(target)) = Rational(1);
  const auto x = solve(A, b);
  if (!x)
    precondition_error("inverse antipode of " + alg_->alphabet().format_letter(g, false) +
                       " is not a combination of normal words of weight <= " + std::to_string(degree));
  Terms t;
  for (std::size_t j = 0; j < basis.size(); ++j) add_term(t, basis[j], (*x)(static_cast<Index>(j)));
  return AlgElt(alg_, std::move(t), true);
}

TensorElt HopfAlgebra::coproduct_word(const Word& w) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = delta_cache_.find(w);
    if (it != delta_cache_.end()) return it->second;
  }
  TensorElt t = tensor(one(), one());
  for (const auto& g : w) t = t * gen_coproduct(g);
  std::lock_guard<std::mutex> lock(mutex_);
  delta_cache_.emplace(w, t);
  return t;
}

Rational HopfAlgebra::counit_word(const Word& w) const {
  Rational r(1);
  for (const auto& g : w) {
    r *= gen_counit(g);
    if (r.is_zero()) break;
  }
  return r;
}

AlgElt HopfAlgebra::antipode_word(const Word& w) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = s_cache_.find(w);
    if (it != s_cache_.end()) return it->second;
  }
  AlgElt r = one();
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = r * gen_antipode(*it);
  std::lock_guard<std::mutex> lock(mutex_);
  s_cache_.emplace(w, r);
  return r;
}

AlgElt HopfAlgebra::antipode_inverse_word(const Word& w) const {
  AlgElt r = one();
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = r * gen_antipode_inverse(*it);
  return r;
}

AlgElt HopfAlgebra::antipode(const AlgElt& a) const {
  return apply_linear(a, alg_, [this](const Word& w) { return antipode_word(w); });
}

AlgElt HopfAlgebra::antipode_inverse(const AlgElt& a) const {
  return apply_linear(a, alg_, [this](const Word& w) { return antipode_inverse_word(w); });
}

AlgElt HopfAlgebra::antipode_power(const AlgElt& a, int k) const {
  AlgElt r = a;
  for (int i = 0; i < k; ++i) r = antipode(r);
  for (int i = 0; i > k; --i) r = antipode_inverse(r);
  return r;
}

LegMap HopfAlgebra::antipode_map() const {
  return leg_map(alg_, [this](const Word& w) { return antipode_word(w); });
}

AlgElt multiply_legs(const TensorElt& t) {
  if (t.legs() != 2) structural_error("multiply_legs expects two legs");
  return as_element(merge_legs(t, 0));
}

// ---------------------------------------------------------------- characters

Rational Character::operator()(const Word& w) const {
  Rational r(1);
  for (const auto& g : w) r *= on_generator(g);
  return r;
}

Rational Character::operator()(const AlgElt& a) const {
  Rational r(0);
  for (const auto& [w, c] : a.terms()) r += c * (*this)(w);
  return r;
}

Verdict Character::validate(const HopfAlgebra& H, int degree) const {
  Verdict v("character " + name);
  for (const auto& [lhs, rhs] : rule_instances(H.algebra()->rules(), degree)) {
    v.sample();
    Rational r(0);
    for (const auto& [w, c] : rhs) r += c * (*this)(w);
    if (r != (*this)(lhs))
      v.fail(H.algebra()->alphabet().format_word(lhs, false), (*this)(lhs).str(), r.str());
  }
  return v;
}

Character counit_character(const HopfPtr& H) {
  return Character{"ε", [H](const Generator& g) { return H->gen_counit(g); }};
}

Verdict GroupLike::validate(const HopfAlgebra& H) const {
  Verdict v("group-like " + element.str());
  v.sample();
  const TensorElt d = H.coproduct(element);
  const TensorElt e = tensor(element, element);
  if (!(d == e)) v.fail(element.str(), e.str(), d.str(), (d - e).str(), (d - e).str(true));
  if (H.counit(element) != Rational(1)) v.fail(element.str(), "ε = 1", "ε = " + H.counit(element).str());
  return v;
}

// ---------------------------------------------------------------- axioms

namespace {

template <class T>
void compare(Verdict& v, const std::string& witness, const T& lhs, const T& rhs) {
  v.sample();
  if (!(lhs == rhs)) {
    const T d = lhs - rhs;
    v.fail(witness, rhs.str(), lhs.str(), d.str(), d.str(true));
  }
}

}  // namespace

CheckReport verify_hopf_axioms(const HopfAlgebra& H, int degree) {
  CheckReport rep;
  rep.subject = H.name();
  Verdict coassoc("coassociativity"), counit_v("counit"), anti("antipode");
  Verdict dmul("coproduct respects relations"), emul("counit respects relations"),
      smul("antipode respects relations");
  const auto& alg = H.algebra();
  if (degree >= 0) {
    for (const auto& w : alg->basis_up_to(degree)) {
      const std::string wit = alg->format_word(w, false);
      const AlgElt x = H.elt(w);
      const TensorElt D = H.coproduct(x);
      compare(coassoc, wit, leg_apply(D, 0, H.delta_map()), leg_apply(D, 1, H.delta_map()));
      compare(counit_v, wit + " (left)", as_element(leg_apply(D, 0, H.counit_map())), x);
      compare(counit_v, wit + " (right)", as_element(leg_apply(D, 1, H.counit_map())), x);
      const AlgElt unit = H.counit(x) * H.one();
      compare(anti, wit + " (S⊗id)", multiply_legs(leg_apply(D, 0, H.antipode_map())), unit);
      compare(anti, wit + " (id⊗S)", multiply_legs(leg_apply(D, 1, H.antipode_map())), unit);
    }
    for (const auto& [lhs, rhs] : rule_instances(alg->rules(), degree)) {
      const std::string wit = alg->alphabet().format_word(lhs, false);
      TensorElt dr({alg, alg});
      Rational er(0);
      AlgElt sr = AlgElt::zero(alg);
      for (const auto& [w, c] : rhs) {
        dr += c * H.coproduct_word(w);
        er += c * H.counit_word(w);
        sr += c * H.antipode_word(w);
      }
      compare(dmul, wit, H.coproduct_word(lhs), dr);
      emul.sample();
      if (H.counit_word(lhs) != er) emul.fail(wit, er.str(), H.counit_word(lhs).str());
      compare(smul, wit, H.antipode_word(lhs), sr);
    }
  }
  for (auto* v : {&coassoc, &counit_v, &anti, &dmul, &emul, &smul}) rep.add(*v);
  return rep;
}

CheckReport check_antipode_properties(const HopfAlgebra& H, int degree) {
  CheckReport rep;
  rep.subject = H.name();
  Verdict eps("counit of antipode"), delta("coproduct of antipode"), anti("antipode anti-multiplicative");
  const auto& alg = H.algebra();
  const auto basis = alg->basis_up_to(degree);
  for (const auto& w : basis) {
    const std::string wit = alg->format_word(w, false);
    const AlgElt x = H.elt(w);
    const AlgElt s = H.antipode(x);
    eps.sample();
    if (H.counit(s) != H.counit(x)) eps.fail(wit, H.counit(x).str(), H.counit(s).str());
    TensorElt rhs = permute_legs(H.coproduct(x), {1, 0});
    rhs = leg_apply(leg_apply(rhs, 0, H.antipode_map()), 1, H.antipode_map());
    compare(delta, wit, H.coproduct(s), rhs);
  }
  for (const auto& a : basis)
    for (const auto& b : basis) {
      if (alg->alphabet().weight(a) + alg->alphabet().weight(b) > degree) continue;
      const AlgElt x = H.elt(a), y = H.elt(b);
      compare(anti, alg->format_word(a, false) + " , " + alg->format_word(b, false), H.antipode(x * y),
              H.antipode(y) * H.antipode(x));
    }
  rep.add(eps);
  rep.add(delta);
  rep.add(anti);
  return rep;
}

}  // namespace hopfcyc
