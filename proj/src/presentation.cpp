#include "hopfcyc/presentation.hpp"

#include "hopfcyc/errors.hpp"

namespace hopfcyc {

bool HopfSpec::operator==(const HopfSpec& o) const {
  if (name != o.name || families != o.families || rules.size() != o.rules.size()) return false;
  for (std::size_t i = 0; i < rules.size(); ++i)
    if (!rules[i].same_data(o.rules[i])) return false;
  return coproduct == o.coproduct && counit == o.counit && antipode == o.antipode &&
         antipode_inverse == o.antipode_inverse && defines == o.defines;
}

bool match_letter(const LetterPattern& p, const Generator& g, const Alphabet& alphabet, Bindings& b) {
  b.clear();
  if (p.name != g.name) return false;
  switch (p.index.kind) {
    case IndexExpr::Kind::None: return !g.indexed();
    case IndexExpr::Kind::Const: return g.index == p.index.value;
    case IndexExpr::Kind::Var: {
      if (!g.indexed()) return false;
      const int v = g.index - p.index.value;
      const auto* fam = alphabet.find(p.name);
      if (fam && (v < fam->min_index || (fam->max_index >= 0 && v > fam->max_index))) return false;
      b[p.index.var] = v;
      return true;
    }
  }
  return false;
}

namespace {

template <class Entry>
const Entry* find_entry(const std::vector<Entry>& entries, const Generator& g, const Alphabet& a, Bindings& b) {
  for (const auto& e : entries)
    if (match_letter(e.gen, g, a, b)) return &e;
  return nullptr;
}


}  // namespace

TupleTerms instantiate_tensor(const std::vector<TensorPatternTerm>& terms, const Bindings& b) {
  TupleTerms out;
  for (const auto& t : terms) {
    std::vector<Word> legs;
    for (const auto& l : t.legs) legs.push_back(instantiate(l, b));
    add_term(out, legs, t.coeff.eval(b));
  }
  return out;
}

HopfPtr build_hopf(const HopfSpec& spec) {
  auto alg = Algebra::presented(spec.name, Alphabet(spec.families), spec.rules);
  const Alphabet alphabet = alg->alphabet();
  auto provider = [spec, alphabet](const HopfAlgebra& H, const Generator& g) {
    GeneratorData d;
    Bindings b;
    Bindings db;
    const DefineEntry* def = find_entry(spec.defines, g, alphabet, db);
    Terms body;
    if (def) body = instantiate(def->body, db);

    if (const auto* e = find_entry(spec.coproduct, g, alphabet, b)) {
      d.coproduct = instantiate_tensor(e->value, b);
    } else if (def) {
      TupleTerms t;
      for (const auto& [w, c] : body)
        for (const auto& [legs, x] : H.coproduct_word(w).terms()) add_term(t, legs, c * x);
      d.coproduct = t;
    }
    if (const auto* e = find_entry(spec.counit, g, alphabet, b)) {
      d.counit = e->value.eval(b);
    } else if (def) {
      Rational r(0);
      for (const auto& [w, c] : body) r += c * H.counit_word(w);
      d.counit = r;
    }
    if (const auto* e = find_entry(spec.antipode, g, alphabet, b)) {
      d.antipode = instantiate(e->value, b);
    } else if (def) {
      AlgElt s = AlgElt::zero(H.algebra());
      for (const auto& [w, c] : body) s += c * H.antipode_word(w);
      d.antipode = s.terms();
    }
    if (const auto* e = find_entry(spec.antipode_inverse, g, alphabet, b)) d.antipode_inverse = instantiate(e->value, b);
    return d;
  };
  return std::make_shared<HopfAlgebra>(spec.name, alg, provider);
}

HopfSpec h1cop_spec() {
  using K = IndexExpr;
  auto L = [](std::string n, IndexExpr i = K::none()) { return LetterPattern{std::move(n), std::move(i)}; };
  const auto dk = L("d", K::variable("k"));
  const auto dk1 = L("d", K::variable("k", 1));
  const auto di = L("d", K::variable("i"));
  const auto d1 = L("d", K::constant(1));
  const auto X = L("X"), Y = L("Y");
  auto term = [](Rational c, std::vector<LetterPattern> w, std::string var = {}) {
    return PatternTerm{CoeffExpr{std::move(c), std::move(var)}, std::move(w)};
  };
  auto tterm = [](Rational c, std::vector<std::vector<LetterPattern>> legs) {
    return TensorPatternTerm{CoeffExpr{std::move(c), {}}, std::move(legs)};
  };

  HopfSpec s;
  s.name = "H1cop";
  s.families = {GeneratorFamily{"d", true, 1, -1, true, 1, "δ"}, GeneratorFamily{"Y", false, 1, -1, false, 1, "Y"},
                GeneratorFamily{"X", false, 1, -1, false, 1, "X"}};

  RewriteRule r1;
  r1.lhs = {X, dk};
  r1.rhs = {term(1, {dk, X}), term(1, {dk1})};
  RewriteRule r2;
  r2.lhs = {Y, dk};
  r2.rhs = {term(1, {dk, Y}), term(1, {dk}, "k")};
  RewriteRule r3;
  r3.lhs = {dk, di};
  r3.rhs = {term(1, {di, dk})};
  r3.conditions = {Condition{"k", Condition::Op::Gt, K::variable("i")}};
  RewriteRule r4;
  r4.lhs = {X, Y};
  r4.rhs = {term(1, {Y, X}), term(-1, {X})};
  s.rules = {r1, r2, r3, r4};

  s.coproduct = {
      CoproductEntry{d1, {tterm(1, {{d1}, {}}), tterm(1, {{}, {d1}})}},
      CoproductEntry{Y, {tterm(1, {{Y}, {}}), tterm(1, {{}, {Y}})}},
      CoproductEntry{X, {tterm(1, {{X}, {}}), tterm(1, {{}, {X}}), tterm(1, {{Y}, {d1}})}},
  };
  s.counit = {CounitEntry{d1, CoeffExpr{0, {}}}, CounitEntry{Y, CoeffExpr{0, {}}}, CounitEntry{X, CoeffExpr{0, {}}}};
  s.antipode = {
      AntipodeEntry{d1, {term(-1, {d1})}},
      AntipodeEntry{Y, {term(-1, {Y})}},
      AntipodeEntry{X, {term(-1, {X}), term(1, {Y, d1})}},
  };
  s.defines = {DefineEntry{dk1, {term(1, {X, dk}), term(-1, {dk, X})}}};
  return s;
}

}  // namespace hopfcyc
