#include "hopfcyc/modules.hpp"

#include "hopfcyc/errors.hpp"

namespace hopfcyc {

AlgebraPtr ground_field() {
  static const AlgebraPtr k = Algebra::presented("k", Alphabet{}, {});
  return k;
}

AlgElt LeftModule::act(const Word& h, const AlgElt& v) const {
  AlgElt out = AlgElt::zero(V);
  for (const auto& [w, c] : v.terms()) out += c * act_word(h, w);
  return out;
}

AlgElt LeftModule::act(const AlgElt& h, const AlgElt& v) const {
  AlgElt out = AlgElt::zero(V);
  for (const auto& [hw, hc] : h.terms()) out += hc * act(hw, v);
  return out;
}

TensorElt LeftModule::act_diag(const Word& h, const TensorElt& t, std::size_t first) const {
  if (first >= t.legs()) structural_error("act_diag: no legs to act on");
  const auto k = static_cast<int>(t.legs() - first);
  const TensorElt D = H->sweedler(H->elt(h), k);
  const auto& legs = t.leg_algebras();
  TensorElt out(legs);
  for (const auto& [tuple, c] : t.terms())
    for (const auto& [hs, x] : D.terms()) {
      std::vector<AlgElt> parts;
      parts.reserve(legs.size());
      for (std::size_t i = 0; i < first; ++i) parts.push_back(AlgElt::word(legs[i], tuple[i]));
      bool zero = false;
      for (std::size_t j = 0; j < hs.size(); ++j) {
        parts.push_back(act_word(hs[j], tuple[first + j]));
        if (parts.back().is_zero()) {
          zero = true;
          break;
        }
      }
      if (!zero) out += (c * x) * tensor(parts);
    }
  return out;
}

TensorElt LeftModule::act_diag(const AlgElt& h, const TensorElt& t, std::size_t first) const {
  TensorElt out(t.leg_algebras());
  for (const auto& [w, c] : h.terms()) out += c * act_diag(w, t, first);
  return out;
}

AlgElt ModuleComodule::act(const AlgElt& m, const Word& h) const {
  AlgElt out = AlgElt::zero(M);
  for (const auto& [w, c] : m.terms()) out += c * act_word(w, h);
  return out;
}

AlgElt ModuleComodule::act(const AlgElt& m, const AlgElt& h) const {
  AlgElt out = AlgElt::zero(M);
  for (const auto& [hw, hc] : h.terms()) out += hc * act(m, hw);
  return out;
}

TensorElt ModuleComodule::coact(const AlgElt& m) const {
  TensorElt out({H->algebra(), M});
  for (const auto& [w, c] : m.terms()) out += c * coact_word(w);
  return out;
}

TensorElt ModuleComodule::act_leg(const TensorElt& t, std::size_t leg, const Word& h) const {
  return leg_apply(t, leg, leg_map(M, [this, h](const Word& w) { return act_word(w, h); }));
}

ModuleCoalgebraPtr regular_module_coalgebra(const HopfPtr& H) {
  auto C = std::make_shared<ModuleCoalgebra>();
  C->name = H->name() + " (left multiplication)";
  C->H = H;
  C->V = H->algebra();
  C->C = H;
  const Algebra* alg = H->algebra().get();
  C->act_word = [H, alg](const Word& h, const Word& v) { return AlgElt(H->algebra(), alg->multiply(h, v), true); };
  return C;
}

ModuleComodulePtr trivial_coefficients(const HopfPtr& H) {
  auto M = std::make_shared<ModuleComodule>();
  M->name = "k";
  M->H = H;
  M->M = ground_field();
  M->trivial_action = M->trivial_coaction = true;
  M->act_word = [H](const Word& m, const Word& h) {
    return H->counit_word(h) * AlgElt::word(ground_field(), m);
  };
  M->coact_word = [H](const Word& m) { return tensor(H->one(), AlgElt::word(ground_field(), m)); };
  return M;
}

ModuleComodulePtr character_coefficients(const HopfPtr& H, const Character& delta, const AlgElt& sigma,
                                         const std::string& name) {
  auto M = std::make_shared<ModuleComodule>();
  M->name = name;
  M->H = H;
  M->M = ground_field();
  M->act_word = [delta](const Word& m, const Word& h) { return delta(h) * AlgElt::word(ground_field(), m); };
  M->coact_word = [sigma](const Word& m) { return tensor(sigma, AlgElt::word(ground_field(), m)); };
  return M;
}

ModuleComodulePtr regular_right_module(const HopfPtr& H) {
  auto M = std::make_shared<ModuleComodule>();
  M->name = H->name() + " (right multiplication)";
  M->H = H;
  M->M = H->algebra();
  M->trivial_coaction = true;
  M->act_word = [H](const Word& m, const Word& h) { return AlgElt(H->algebra(), H->algebra()->multiply(m, h), true); };
  M->coact_word = [H](const Word& m) { return tensor(H->one(), H->elt(m)); };
  return M;
}

ModuleComodulePtr coregular_comodule(const HopfPtr& H) {
  auto M = std::make_shared<ModuleComodule>();
  M->name = H->name() + " (coregular)";
  M->H = H;
  M->M = H->algebra();
  M->trivial_action = true;
  M->act_word = [H](const Word& m, const Word& h) { return H->counit_word(h) * H->elt(m); };
  M->coact_word = [H](const Word& m) { return H->coproduct_word(m); };
  return M;
}

namespace {

template <class T>
void expect_equal(Verdict& v, const std::string& witness, const T& computed, const T& expected) {
  v.sample();
  if (!(computed == expected)) {
    const T d = computed - expected;
    v.fail(witness, expected.str(), computed.str(), d.str(), d.str(true));
  }
}

}  // namespace

CheckReport validate_module_coalgebra(const ModuleCoalgebra& C, int degree) {
  CheckReport rep;
  rep.subject = C.name;
  Verdict assoc("action associative"), unit("action unital"), delta("coproduct H-linear"), eps("counit H-linear");
  const auto& HA = C.H->algebra();
  const auto hb = HA->basis_up_to(degree);
  const auto cb = C.V->basis_up_to(degree);
  for (const auto& c : cb) {
    const AlgElt ce = AlgElt::word(C.V, c);
    const std::string cw = C.V->format_word(c, false);
    expect_equal(unit, cw, C.act_word({}, c), ce);
    const TensorElt dc = C.C->coproduct_word(c);
    for (const auto& h : hb) {
      const std::string hw = HA->format_word(h, false) + " , " + cw;
      const AlgElt hc = C.act_word(h, c);
      expect_equal(delta, hw, C.C->coproduct(hc), C.act_diag(h, dc));
      eps.sample();
      const Rational l = C.C->counit(hc), r = C.H->counit_word(h) * C.C->counit_word(c);
      if (l != r) eps.fail(hw, r.str(), l.str());
      for (const auto& g : hb) {
        if (HA->alphabet().weight(h) + HA->alphabet().weight(g) > degree) continue;
        const AlgElt hg = C.H->elt(h) * C.H->elt(g);
        expect_equal(assoc, HA->format_word(h, false) + " , " + HA->format_word(g, false) + " , " + cw,
                     C.act(hg, ce), C.act(h, C.act_word(g, c)));
      }
    }
  }
  for (auto* v : {&assoc, &unit, &delta, &eps}) rep.add(*v);
  return rep;
}

CheckReport validate_module_algebra(const ModuleAlgebra& A, int degree) {
  CheckReport rep;
  rep.subject = A.name;
  Verdict assoc("action associative"), unit("action unital"), mult("product H-linear"), one("unit H-linear");
  const auto& HA = A.H->algebra();
  const auto hb = HA->basis_up_to(degree);
  const auto ab = A.V->basis_up_to(degree);
  const AlgElt oneA = AlgElt::one(A.V);
  for (const auto& h : hb) {
    const std::string hw = HA->format_word(h, false);
    expect_equal(one, hw, A.act(h, oneA), A.H->counit_word(h) * oneA);
    const TensorElt D = A.H->coproduct_word(h);
    for (const auto& a : ab)
      for (const auto& b : ab) {
        if (A.V->alphabet().weight(a) + A.V->alphabet().weight(b) > degree) continue;
        AlgElt r = AlgElt::zero(A.V);
        for (const auto& [legs, c] : D.terms()) r += c * (A.act_word(legs[0], a) * A.act_word(legs[1], b));
        expect_equal(mult, hw + " , " + A.V->format_word(a, false) + " , " + A.V->format_word(b, false),
                     A.act(h, AlgElt::word(A.V, a) * AlgElt::word(A.V, b)), r);
      }
  }
  for (const auto& a : ab) {
    const AlgElt ae = AlgElt::word(A.V, a);
    expect_equal(unit, A.V->format_word(a, false), A.act_word({}, a), ae);
    for (const auto& h : hb)
      for (const auto& g : hb) {
        if (HA->alphabet().weight(h) + HA->alphabet().weight(g) > degree) continue;
        expect_equal(assoc, HA->format_word(h, false) + " , " + HA->format_word(g, false) + " , " + A.V->format_word(a, false),
                     A.act(A.H->elt(h) * A.H->elt(g), ae), A.act(h, A.act_word(g, a)));
      }
  }
  for (auto* v : {&assoc, &unit, &mult, &one}) rep.add(*v);
  return rep;
}

CheckReport validate_module_comodule(const ModuleComodule& M, int degree) {
  CheckReport rep;
  rep.subject = M.name;
  Verdict assoc("action associative"), unit("action unital"), coassoc("coaction coassociative"),
      counit("coaction counital");
  const auto& HA = M.H->algebra();
  const auto hb = HA->basis_up_to(degree);
  const auto mb = M.M->basis_up_to(degree);
  for (const auto& m : mb) {
    const AlgElt me = AlgElt::word(M.M, m);
    const std::string mw = M.M->format_word(m, false);
    expect_equal(unit, mw, M.act_word(m, {}), me);
    const TensorElt c = M.coact_word(m);
    const TensorElt l = leg_apply(c, 0, M.H->delta_map());
    const TensorElt r = leg_apply(c, 1, LegMap{{M.H->algebra(), M.M}, [&M](const Word& w) { return M.coact_word(w); }});
    expect_equal(coassoc, mw, l, r);
    expect_equal(counit, mw, as_element(leg_apply(c, 0, M.H->counit_map())), me);
    for (const auto& h : hb)
      for (const auto& g : hb) {
        if (HA->alphabet().weight(h) + HA->alphabet().weight(g) > degree) continue;
        expect_equal(assoc, mw + " , " + HA->format_word(h, false) + " , " + HA->format_word(g, false),
                     M.act(M.act_word(m, h), g), M.act(me, M.H->elt(h) * M.H->elt(g)));
      }
  }
  for (auto* v : {&assoc, &unit, &coassoc, &counit}) rep.add(*v);
  return rep;
}

}  // namespace hopfcyc
