#include "hopfcyc/cup.hpp"

#include "hopfcyc/errors.hpp"

#include <map>

namespace hopfcyc {

namespace {

template <class T>
void expect_equal(Verdict& v, const std::string& witness, const T& computed, const T& expected) {
  v.sample();
  if (!(computed == expected)) {
    const T d = computed - expected;
    v.fail(witness, expected.str(), computed.str(), d.str(), d.str(true));
  }
}

void expect_matrix(Verdict& v, const std::string& witness, const QMat& computed, const QMat& expected) {
  v.sample();
  if (computed != expected) v.fail(witness, matrix_text(expected), matrix_text(computed), matrix_text(computed - expected));
}

std::string word_text(const AlgebraPtr& a, const Word& w) { return AlgElt::word(a, w).str(true); }

std::map<Word, Index> index_of(const std::vector<Word>& basis) {
  std::map<Word, Index> out;
  for (std::size_t j = 0; j < basis.size(); ++j) out[basis[j]] = static_cast<Index>(j);
  return out;
}

AlgElt act_elt(const CompatibleAction& ca, const AlgElt& c, const AlgElt& a) {
  AlgElt out = AlgElt::zero(ca.A->V);
  for (const auto& [w, k] : c.terms()) out += k * ca.act(w, a);
  return out;
}

std::string vec_text(const QVec& v) { return matrix_text(v.transpose()); }

}  // namespace

AlgElt CompatibleAction::act(const Word& c, const AlgElt& a) const {
  AlgElt out = AlgElt::zero(A->V);
  for (const auto& [w, k] : a.terms()) out += k * act_word(c, w);
  return out;
}

CheckReport check_compatible_action(const CompatibleAction& ca) {
  CheckReport r;
  r.subject = ca.C->name + " acting on " + ca.A->name;
  const auto& H = *ca.C->H;
  const auto& cb = finite_words(ca.C->V);
  const auto& ab = finite_words(ca.A->V);
  Verdict lin("(hc)a = h(ca)"), mult("c(ab) = (c(1)a)(c(2)b)"), unit("c1 = ε(c)1");
  for (const auto& c : cb) {
    const std::string cw = "c=" + word_text(ca.C->V, c);
    for (const auto& a : ab) {
      const AlgElt av = AlgElt::word(ca.A->V, a);
      for (const auto& h : finite_words(H.algebra()))
        expect_equal(lin, cw + ", a=" + word_text(ca.A->V, a) + ", h=" + word_text(H.algebra(), h),
                     act_elt(ca, ca.C->act_word(h, c), av), ca.A->act(h, ca.act(c, av)));
      for (const auto& b : ab) {
        const AlgElt bv = AlgElt::word(ca.A->V, b);
        AlgElt rhs = AlgElt::zero(ca.A->V);
        for (const auto& [t, k] : ca.C->C->coproduct_word(c).terms()) rhs += k * (ca.act(t[0], av) * ca.act(t[1], bv));
        expect_equal(mult, cw + ", a=" + word_text(ca.A->V, a) + ", b=" + word_text(ca.A->V, b), ca.act(c, av * bv), rhs);
      }
    }
    expect_equal(unit, cw, ca.act(c, AlgElt::one(ca.A->V)), ca.C->C->counit_word(c) * AlgElt::one(ca.A->V));
  }
  for (auto* v : {&lin, &mult, &unit}) r.add(*v);
  return r;
}

CompatibleAction group_compatible_action(const GroupInstance& gi) {
  const auto& d = gi.data;
  const int n = static_cast<int>(d.mult.size());
  const int m = static_cast<int>(d.set.size());
  if (n != m) precondition_error(d.name + ": the action on the set is not simply transitive");
  std::vector<int> carrier(static_cast<std::size_t>(m), -1);  // x -> g with g·x_0 = x
  for (int g = 0; g < n; ++g) {
    auto& slot = carrier[static_cast<std::size_t>(d.action[static_cast<std::size_t>(g)][0])];
    if (slot >= 0) precondition_error(d.name + ": the action on the set is not simply transitive");
    slot = g;
  }
  CompatibleAction ca;
  ca.C = gi.CX_module;
  ca.A = gi.FunX;
  const auto action = d.action;
  const AlgebraPtr fun = gi.FunX->V;
  const GroupInstance copy = gi;
  ca.act_word = [carrier, action, fun, copy](const Word& c, const Word& a) {
    if (a.empty()) return AlgElt::one(fun);
    const int g = carrier[static_cast<std::size_t>(copy.point_of(c))];
    return AlgElt::word(fun, Word{Generator("e", action[static_cast<std::size_t>(g)][static_cast<std::size_t>(a[0].index)])});
  };
  return ca;
}

// ---------------------------------------------------------------- convolution

ConvolutionAlgebra::ConvolutionAlgebra(ModuleCoalgebraPtr C, ModuleAlgebraPtr A) : C_(std::move(C)), A_(std::move(A)) {
  const auto& cb = finite_words(C_->V);
  const auto& ab = finite_words(A_->V);
  const auto nc = static_cast<Index>(cb.size());
  const auto na = static_cast<Index>(ab.size());
  const auto& hb = finite_words(C_->H->algebra());
  // Unknown f(i, j) sits at i + na * j.
  QMat cons = zeros<Rational>(static_cast<Index>(hb.size()) * nc * na, na * nc);
  Index row = 0;
  const auto cidx = index_of(cb);
  for (const auto& h : hb)
    for (Index j = 0; j < nc; ++j, row += na) {
      for (const auto& [w, k] : C_->act_word(h, cb[static_cast<std::size_t>(j)]).terms()) {
        const Index kc = cidx.at(w);
        for (Index r = 0; r < na; ++r) cons(row + r, r + na * kc) += k;
      }
      for (Index i = 0; i < na; ++i) {
        const QVec hi = coords(A_->act(h, AlgElt::word(A_->V, ab[static_cast<std::size_t>(i)])));
        for (Index r = 0; r < na; ++r) cons(row + r, i + na * j) -= hi(r);
      }
    }
  const QMat ns = nullspace(cons);
  for (Index k = 0; k < ns.cols(); ++k) {
    QMat f(na, nc);
    for (Index j = 0; j < nc; ++j)
      for (Index i = 0; i < na; ++i) f(i, j) = ns(i + na * j, k);
    basis_.push_back(f);
  }
}

QVec ConvolutionAlgebra::coords(const AlgElt& a) const {
  const auto& ab = finite_words(A_->V);
  QVec v = zeros<Rational>(static_cast<Index>(ab.size()), 1);
  static thread_local std::map<const Algebra*, std::map<Word, Index>> cache;
  auto& idx = cache[A_->V.get()];
  if (idx.empty()) idx = index_of(ab);
  for (const auto& [w, k] : a.terms()) {
    auto it = idx.find(w);
    if (it == idx.end()) structural_error("convolution: element outside the basis of " + A_->name);
    v(it->second) = k;
  }
  return v;
}

QMat ConvolutionAlgebra::unit() const {
  const auto& cb = finite_words(C_->V);
  QMat u(static_cast<Index>(finite_words(A_->V).size()), static_cast<Index>(cb.size()));
  const QVec one = coords(AlgElt::one(A_->V));
  for (std::size_t j = 0; j < cb.size(); ++j) u.col(static_cast<Index>(j)) = C_->C->counit_word(cb[j]) * one;
  return u;
}

AlgElt ConvolutionAlgebra::apply(const QMat& f, const Word& c) const {
  const auto& cb = finite_words(C_->V);
  const auto& ab = finite_words(A_->V);
  Index j = -1;
  for (std::size_t k = 0; k < cb.size(); ++k)
    if (cb[k] == c) j = static_cast<Index>(k);
  if (j < 0) structural_error("convolution: word outside the basis of " + C_->name);
  AlgElt out = AlgElt::zero(A_->V);
  for (Index i = 0; i < f.rows(); ++i)
    if (!f(i, j).is_zero()) out += f(i, j) * AlgElt::word(A_->V, ab[static_cast<std::size_t>(i)]);
  return out;
}

AlgElt ConvolutionAlgebra::apply(const QMat& f, const AlgElt& c) const {
  AlgElt out = AlgElt::zero(A_->V);
  for (const auto& [w, k] : c.terms()) out += k * apply(f, w);
  return out;
}

std::string ConvolutionAlgebra::h_linearity_witness(const QMat& f) const {
  for (const auto& h : finite_words(C_->H->algebra()))
    for (const auto& c : finite_words(C_->V)) {
      const AlgElt lhs = apply(f, C_->act_word(h, c));
      const AlgElt rhs = A_->act(h, apply(f, c));
      if (!(lhs == rhs))
        return "h=" + word_text(C_->H->algebra(), h) + ", c=" + word_text(C_->V, c) + ": f(hc) = " + lhs.str(true) +
               ", h f(c) = " + rhs.str(true);
    }
  return {};
}

QMat ConvolutionAlgebra::convolve_unchecked(const QMat& f, const QMat& g) const {
  const auto& cb = finite_words(C_->V);
  QMat out(f.rows(), f.cols());
  for (std::size_t j = 0; j < cb.size(); ++j) {
    AlgElt v = AlgElt::zero(A_->V);
    for (const auto& [t, k] : C_->C->coproduct_word(cb[j]).terms()) v += k * (apply(f, t[0]) * apply(g, t[1]));
    out.col(static_cast<Index>(j)) = coords(v);
  }
  return out;
}

QMat ConvolutionAlgebra::convolve(const QMat& f, const QMat& g) const {
  for (const QMat* x : {&f, &g}) {
    const std::string w = h_linearity_witness(*x);
    if (!w.empty()) precondition_error("convolve: input is not H-linear (" + w + ")");
  }
  return convolve_unchecked(f, g);
}

QMat ConvolutionAlgebra::chi(const CompatibleAction& ca, const AlgElt& a) const {
  const auto& cb = finite_words(C_->V);
  QMat out(static_cast<Index>(finite_words(A_->V).size()), static_cast<Index>(cb.size()));
  for (std::size_t j = 0; j < cb.size(); ++j) out.col(static_cast<Index>(j)) = coords(ca.act(cb[j], a));
  return out;
}

CheckReport check_convolution(const ConvolutionAlgebra& B) {
  CheckReport r;
  r.subject = "Hom_H(" + B.coalgebra().name + ", " + B.algebra().name + ")";
  Verdict closed("f∗g is H-linear"), assoc("(f∗g)∗h = f∗(g∗h)"), unit("f∗η∘ε = η∘ε∗f = f");
  const auto& bs = B.basis();
  const QMat u = B.unit();
  {
    Verdict uh("η∘ε is H-linear");
    uh.sample();
    const std::string w = B.h_linearity_witness(u);
    if (!w.empty()) uh.fail(w);
    r.add(uh);
  }
  for (std::size_t a = 0; a < bs.size(); ++a) {
    const std::string aw = "f=b" + std::to_string(a);
    expect_matrix(unit, aw + " (right)", B.convolve(bs[a], u), bs[a]);
    expect_matrix(unit, aw + " (left)", B.convolve(u, bs[a]), bs[a]);
    for (std::size_t b = 0; b < bs.size(); ++b) {
      const QMat fg = B.convolve(bs[a], bs[b]);
      closed.sample();
      const std::string w = B.h_linearity_witness(fg);
      if (!w.empty()) closed.fail(aw + ", g=b" + std::to_string(b) + ": " + w);
      for (std::size_t c = 0; c < bs.size(); ++c)
        expect_matrix(assoc, aw + ", g=b" + std::to_string(b) + ", h=b" + std::to_string(c), B.convolve(fg, bs[c]),
                      B.convolve(bs[a], B.convolve(bs[b], bs[c])));
    }
  }
  for (auto* v : {&closed, &assoc, &unit}) r.add(*v);
  return r;
}

CheckReport check_chi(const ConvolutionAlgebra& B, const CompatibleAction& ca) {
  CheckReport r;
  r.subject = "χ : " + ca.A->name + " -> Hom_H(" + ca.C->name + ", " + ca.A->name + ")";
  Verdict lin("χ(a) is H-linear"), unit("χ(1) = η∘ε"), mult("χ(ab) = χ(a)∗χ(b)");
  const auto& ab = finite_words(ca.A->V);
  expect_matrix(unit, "a=1", B.chi(ca, AlgElt::one(ca.A->V)), B.unit());
  for (const auto& a : ab) {
    const AlgElt av = AlgElt::word(ca.A->V, a);
    const QMat xa = B.chi(ca, av);
    lin.sample();
    const std::string w = B.h_linearity_witness(xa);
    if (!w.empty()) lin.fail("a=" + word_text(ca.A->V, a) + ": " + w);
    for (const auto& b : ab) {
      const AlgElt bv = AlgElt::word(ca.A->V, b);
      expect_matrix(mult, "a=" + word_text(ca.A->V, a) + ", b=" + word_text(ca.A->V, b), B.chi(ca, av * bv),
                    B.convolve(xa, B.chi(ca, bv)));
    }
  }
  for (auto* v : {&lin, &unit, &mult}) r.add(*v);
  return r;
}

// ---------------------------------------------------------------- Ψ and cup

CocyclicInstance plain_algebra_instance(const ModuleAlgebra& A, int top, std::vector<RelativeTensorSpace>* spaces) {
  if (top < 0) usage_error("negative degree");
  CocyclicInstance inst;
  inst.name = "C(" + A.name + ")";
  inst.side = "algebra";
  inst.top = top;
  inst.cofaces.resize(static_cast<std::size_t>(top));
  inst.codegeneracies.resize(static_cast<std::size_t>(top));
  inst.tau.resize(static_cast<std::size_t>(top) + 1);
  std::vector<RelativeTensorSpace> sp;
  for (int n = 0; n <= top; ++n) {
    sp.push_back(ambient_space(std::vector<AlgebraPtr>(static_cast<std::size_t>(n) + 1, A.V), n));
    inst.dims.push_back(sp.back().dim());
  }
  const AlgElt one = AlgElt::one(A.V);
  for (int n = 0; n <= top; ++n) {
    const auto& s = sp[static_cast<std::size_t>(n)];
    std::vector<std::size_t> rot{static_cast<std::size_t>(n)};
    for (int k = 0; k < n; ++k) rot.push_back(static_cast<std::size_t>(k));
    inst.tau[static_cast<std::size_t>(n)] =
        ambient_matrix(s, s, [&](const TensorElt& x) { return permute_legs(x, rot); }).transpose();
    if (n == top) break;
    const auto& u = sp[static_cast<std::size_t>(n) + 1];
    for (int i = 0; i <= n + 1; ++i) {
      auto face = [&](const TensorElt& x) {
        if (i <= n) return merge_legs(x, static_cast<std::size_t>(i));
        std::vector<std::size_t> front{static_cast<std::size_t>(n) + 1};
        for (int k = 0; k <= n; ++k) front.push_back(static_cast<std::size_t>(k));
        return merge_legs(permute_legs(x, front), 0);
      };
      inst.cofaces[static_cast<std::size_t>(n)].push_back(ambient_matrix(u, s, face).transpose());
    }
    for (int i = 0; i <= n; ++i) {
      auto degen = [&](const TensorElt& x) {
        return map_terms(x, u.legs, [&](const std::vector<Word>& t) {
          std::vector<AlgElt> parts;
          for (std::size_t k = 0; k < t.size(); ++k) {
            parts.push_back(AlgElt::word(A.V, t[k]));
            if (k == static_cast<std::size_t>(i)) parts.push_back(one);
          }
          return tensor(parts);
        });
      };
      inst.codegeneracies[static_cast<std::size_t>(n)].push_back(ambient_matrix(s, u, degen).transpose());
    }
  }
  inst.construction.subject = inst.name;
  if (spaces) *spaces = std::move(sp);
  return inst;
}

namespace {

/// Functional on the ambient space of C^n_H(A, M) from dual coordinates.
QVec ambient_functional(const RelativeTensorSpace& sp, const QVec& phi) { return sp.quotient.P.transpose() * phi; }

/// m ⊗ c_0 a_0 ⊗ ... ⊗ c_n a_n.
TensorElt pair_chain(const CupSetting& s, const std::vector<Word>& chain, const std::vector<Word>& as) {
  std::vector<AlgElt> parts{AlgElt::word(s.M->M, chain[0])};
  for (std::size_t k = 1; k < chain.size(); ++k)
    parts.push_back(s.action.act(chain[k], AlgElt::word(s.action.A->V, as[k - 1])));
  return tensor(parts);
}

/// Ψ_{a,c}(φ ⊗ x)(f_0 ⊗ ... ⊗ f_n) for an ambient chain vector x.
Rational psi_b_ambient(const CupSetting& s, const ConvolutionAlgebra& B, int n, const QVec& phi, const QVec& x,
                       const std::vector<QMat>& fs) {
  const auto& asp = s.alg_spaces[static_cast<std::size_t>(n)];
  const auto& csp = s.coalg_spaces[static_cast<std::size_t>(n)];
  const QVec fn = ambient_functional(asp, phi);
  Rational out;
  for (Index u = 0; u < csp.ambient_dim(); ++u) {
    if (x(u).is_zero()) continue;
    const auto& chain = csp.basis[static_cast<std::size_t>(u)];
    std::vector<AlgElt> parts{AlgElt::word(s.M->M, chain[0])};
    for (std::size_t k = 1; k < chain.size(); ++k) parts.push_back(B.apply(fs[k - 1], chain[k]));
    const QVec v = asp.encode(tensor(parts));
    out += x(u) * fn.dot(v);
  }
  return out;
}

}  // namespace

CupSetting build_cup_setting(const ModuleComodulePtr& M, const CompatibleAction& ca, int top) {
  if (top < 1) usage_error("cup setting needs top >= 1");
  CupSetting s;
  s.M = M;
  s.action = ca;
  s.top = top;
  s.report.subject = "cup setting: " + M->name + ", " + ca.C->name + " on " + ca.A->name;
  s.report.append(check_ch_sayd(*M, *ca.C), "M: ");
  s.report.append(check_ah_sayd(*M, *ca.A), "M: ");
  s.report.append(check_compatible_action(ca), "action: ");
  s.alg = algebra_instance(*M, *ca.A, top);
  s.coalg = coalgebra_instance(*M, *ca.C, top);
  s.plain = plain_algebra_instance(*ca.A, top, &s.plain_spaces);
  for (int n = 0; n <= top; ++n) {
    s.alg_spaces.push_back(balanced_algebra_space(*M, *ca.A, n));
    s.coalg_spaces.push_back(relative_tensor(*M, *ca.C, n));
  }
  s.report.append(s.alg.construction, "C_H(A): ");
  s.report.append(s.coalg.construction, "C_H(C): ");
  s.report.append(check_cocyclic(s.alg), "C_H(A): ");
  s.report.append(check_cocyclic(s.coalg), "C_H(C): ");
  s.report.append(check_cocyclic(s.plain), "C(A): ");

  Verdict wd("Ψ well defined on M ⊗_H C^{⊗(n+1)}");
  for (int n = 0; n <= top; ++n) {
    const auto& asp = s.alg_spaces[static_cast<std::size_t>(n)];
    const auto& csp = s.coalg_spaces[static_cast<std::size_t>(n)];
    const auto& psp = s.plain_spaces[static_cast<std::size_t>(n)];
    const Index da = asp.dim();
    std::vector<QMat> gs;
    for (Index k = 0; k < psp.ambient_dim(); ++k) {
      const auto& as = psp.basis[static_cast<std::size_t>(k)];
      // P E e_u for ambient chains u, computed on demand; E is sparse.
      std::map<Index, QVec> pe;
      auto column = [&](Index u) -> const QVec& {
        auto it = pe.find(u);
        if (it != pe.end()) return it->second;
        QVec v = zeros<Rational>(da, 1);
        for (const auto& [w, c] : pair_chain(s, csp.basis[static_cast<std::size_t>(u)], as).terms())
          v += c * asp.quotient.P.col(asp.index.at(w));
        return pe.emplace(u, std::move(v)).first->second;
      };
      auto image = [&](const QMat& m, Index j) {
        QVec v = zeros<Rational>(da, 1);
        for (Index u = 0; u < m.rows(); ++u)
          if (!m(u, j).is_zero()) v += m(u, j) * column(u);
        return v;
      };
      for (Index c = 0; c < csp.relations.cols(); ++c) {
        wd.sample();
        const QVec v = image(csp.relations, c);
        if (!is_zero(v)) wd.fail("n=" + std::to_string(n) + ", tuple " + std::to_string(k) + ", relation " + std::to_string(c), "0", vec_text(v));
      }
      QMat g(da, csp.dim());
      for (Index j = 0; j < csp.dim(); ++j) g.col(j) = image(csp.quotient.L, j);
      gs.push_back(std::move(g));
    }
    s.psi.push_back(std::move(gs));
  }
  s.report.add(wd);
  return s;
}

QVec psi(const CupSetting& s, int n, const QVec& phi, const QVec& y) {
  if (n < 0 || n > s.top) usage_error("psi: degree out of range");
  const auto& gs = s.psi[static_cast<std::size_t>(n)];
  if (phi.size() != gs.front().rows() || y.size() != gs.front().cols()) structural_error("psi: degree mismatch");
  QVec out(static_cast<Index>(gs.size()));
  for (std::size_t k = 0; k < gs.size(); ++k) out(static_cast<Index>(k)) = phi.dot(gs[k] * y);
  return out;
}

Rational psi_convolution(const CupSetting& s, const ConvolutionAlgebra& B, int n, const QVec& phi, const QVec& y,
                         const std::vector<QMat>& fs) {
  if (n < 0 || n > s.top) usage_error("psi: degree out of range");
  if (static_cast<int>(fs.size()) != n + 1) structural_error("psi: expected " + std::to_string(n + 1) + " maps");
  const auto& csp = s.coalg_spaces[static_cast<std::size_t>(n)];
  return psi_b_ambient(s, B, n, phi, csp.quotient.L * y, fs);
}

CheckReport check_psi(const CupSetting& s, int max_n) {
  if (max_n + 1 > s.top) usage_error("check_psi: needs top >= max_n + 1");
  CheckReport r;
  r.subject = "Ψ : C_H(A, M) ⊗ C_H(C, M) -> C(A)";
  const ConvolutionAlgebra B(s.action.C, s.action.A);
  const auto& ab = finite_words(s.action.A->V);
  std::vector<QMat> chis;
  for (const auto& a : ab) chis.push_back(B.chi(s.action, AlgElt::word(s.action.A->V, a)));

  Verdict route("Ψ = χ∘Ψ_{a,c}"), rel("Ψ_{a,c} vanishes on relations"), dv("Ψ commutes with d_i"),
      sv("Ψ commutes with s_i"), tv("Ψ commutes with t");
  auto unit_vec = [](Index n, Index j) {
    QVec v = zeros<Rational>(n, 1);
    v(j) = Rational(1);
    return v;
  };
  for (int n = 0; n <= max_n; ++n) {
    const Index da = s.alg.dims[static_cast<std::size_t>(n)];
    const Index dc = s.coalg.dims[static_cast<std::size_t>(n)];
    const auto& csp = s.coalg_spaces[static_cast<std::size_t>(n)];
    const auto& psp = s.plain_spaces[static_cast<std::size_t>(n)];
    // Maps f_i drawn from the basis of Hom_H(C, A), cycled across legs.
    std::vector<std::vector<QMat>> ftuples;
    if (B.dim() > 0)
      for (Index start = 0; start < B.dim(); ++start) {
        std::vector<QMat> fs;
        for (int k = 0; k <= n; ++k) fs.push_back(B.basis()[static_cast<std::size_t>((start + k) % B.dim())]);
        ftuples.push_back(std::move(fs));
      }
    for (Index j = 0; j < da; ++j) {
      const QVec phi = unit_vec(da, j);
      for (const auto& fs : ftuples)
        for (Index c = 0; c < csp.relations.cols(); ++c) {
          rel.sample();
          const Rational v = psi_b_ambient(s, B, n, phi, csp.relations.col(c), fs);
          if (!v.is_zero()) rel.fail("n=" + std::to_string(n) + ", φ=e" + std::to_string(j) + ", relation " + std::to_string(c), "0", v.str());
        }
      for (Index k = 0; k < dc; ++k) {
        const QVec y = unit_vec(dc, k);
        const QVec val = psi(s, n, phi, y);
        const std::string w = "n=" + std::to_string(n) + ", φ=e" + std::to_string(j) + ", y=e" + std::to_string(k);
        for (Index t = 0; t < psp.ambient_dim(); ++t) {
          std::vector<QMat> fs;
          for (const auto& a : psp.basis[static_cast<std::size_t>(t)]) {
            for (std::size_t i = 0; i < ab.size(); ++i)
              if (ab[i] == a) fs.push_back(chis[i]);
          }
          route.sample();
          const Rational via_b = psi_convolution(s, B, n, phi, y, fs);
          if (via_b != val(t)) route.fail(w + ", tuple " + std::to_string(t), via_b.str(), val(t).str());
        }
        expect_matrix(tv, w, QMat(psi(s, n, s.alg.tau[static_cast<std::size_t>(n)] * phi, s.coalg.tau[static_cast<std::size_t>(n)] * y)),
                      QMat(s.plain.tau[static_cast<std::size_t>(n)] * val));
        if (n + 1 > max_n) continue;
        for (int i = 0; i <= n + 1; ++i) {
          const auto ui = static_cast<std::size_t>(i);
          const auto un = static_cast<std::size_t>(n);
          expect_matrix(dv, w + ", i=" + std::to_string(i),
                        QMat(psi(s, n + 1, s.alg.cofaces[un][ui] * phi, s.coalg.cofaces[un][ui] * y)),
                        QMat(s.plain.cofaces[un][ui] * val));
        }
      }
    }
    if (n + 1 > max_n) continue;
    const Index da1 = s.alg.dims[static_cast<std::size_t>(n) + 1];
    const Index dc1 = s.coalg.dims[static_cast<std::size_t>(n) + 1];
    for (Index j = 0; j < da1; ++j)
      for (Index k = 0; k < dc1; ++k) {
        const QVec phi = unit_vec(da1, j);
        const QVec y = unit_vec(dc1, k);
        const QVec val = psi(s, n + 1, phi, y);
        for (int i = 0; i <= n; ++i) {
          const auto ui = static_cast<std::size_t>(i);
          const auto un = static_cast<std::size_t>(n);
          expect_matrix(sv, "n=" + std::to_string(n + 1) + ", φ=e" + std::to_string(j) + ", y=e" + std::to_string(k) + ", i=" + std::to_string(i),
                        QMat(psi(s, n, s.alg.codegeneracies[un][ui] * phi, s.coalg.codegeneracies[un][ui] * y)),
                        QMat(s.plain.codegeneracies[un][ui] * val));
        }
      }
  }
  for (auto* v : {&route, &rel, &dv, &sv, &tv}) r.add(*v);
  return r;
}

namespace {

/// Ψ(d_{p+q}...d_{p+1} φ ⊗ ∂_0^p y) without the cocycle test.
QVec cup_chain(const CupSetting& s, int p, const QVec& phi, int q, const QVec& y) {
  const int n = p + q;
  QVec x = phi;
  for (int k = p; k < n; ++k) x = s.alg.cofaces[static_cast<std::size_t>(k)][static_cast<std::size_t>(k) + 1] * x;
  QVec z = y;
  for (int k = q; k < n; ++k) z = s.coalg.cofaces[static_cast<std::size_t>(k)][0] * z;
  return psi(s, n, x, z);
}

}  // namespace

CupResult cup(const CupSetting& s, int p, const QVec& phi, int q, const QVec& y) {
  const int n = p + q;
  if (p < 0 || q < 0) usage_error("cup: negative degree");
  if (n + 1 > s.top) usage_error("cup: bidegree (" + std::to_string(p) + "," + std::to_string(q) + ") needs top >= " + std::to_string(n + 1));
  if (phi.size() != s.alg.dims[static_cast<std::size_t>(p)] || y.size() != s.coalg.dims[static_cast<std::size_t>(q)])
    structural_error("cup: degree mismatch");
  const QVec bphi = hochschild_coboundary(s.alg, p) * phi;
  if (!is_zero(bphi)) precondition_error("cup: φ is not a cocycle, bφ = " + vec_text(bphi));
  const QVec by = hochschild_coboundary(s.coalg, q) * y;
  if (!is_zero(by)) precondition_error("cup: y is not a cocycle, by = " + vec_text(by));
  CupResult res;
  res.p = p;
  res.q = q;
  res.value = cup_chain(s, p, phi, q, y);
  res.cocycle = is_zero(hochschild_coboundary(s.plain, n) * res.value);
  res.cyclic = cyclic_lambda(s.plain, n) * res.value == res.value;
  return res;
}

CheckReport check_cup(const CupSetting& s, const std::vector<std::pair<int, int>>& bidegrees) {
  CheckReport r;
  r.subject = "cup products " + s.report.subject.substr(s.report.subject.find(':') + 2);
  for (const auto& [p, q] : bidegrees) {
    const std::string bd = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    Verdict v("b(φ ⊔ y) = 0 at " + bd);
    const QMat zp = nullspace(hochschild_coboundary(s.alg, p));
    const QMat zq = nullspace(hochschild_coboundary(s.coalg, q));
    long nonzero = 0, cyclic = 0;
    for (Index i = 0; i < zp.cols(); ++i)
      for (Index j = 0; j < zq.cols(); ++j) {
        const CupResult c = cup(s, p, zp.col(i), q, zq.col(j));
        v.sample();
        if (!is_zero(c.value)) ++nonzero;
        if (c.cyclic) ++cyclic;
        if (!c.cocycle)
          v.fail("φ=z" + std::to_string(i) + ", y=z" + std::to_string(j), "0",
                 vec_text(hochschild_coboundary(s.plain, p + q) * c.value));
      }
    v.note = std::to_string(zp.cols()) + " x " + std::to_string(zq.cols()) + " cocycle pairs, " + std::to_string(nonzero) +
             " nonzero, " + std::to_string(cyclic) + " λ-invariant";
    r.add(v);
    // On all cochains, not only cocycles: b(φ ⊔ y) = bφ ⊔ y + (-1)^p φ ⊔ by.
    Verdict leib("Leibniz rule at " + bd);
    if (p + q + 2 <= s.top) {
      const Index da = s.alg.dims[static_cast<std::size_t>(p)];
      const Index dc = s.coalg.dims[static_cast<std::size_t>(q)];
      const QMat bp = hochschild_coboundary(s.alg, p);
      const QMat bq = hochschild_coboundary(s.coalg, q);
      const QMat bn = hochschild_coboundary(s.plain, p + q);
      const Rational sign(p % 2 == 0 ? 1 : -1);
      for (Index i = 0; i < da; ++i)
        for (Index j = 0; j < dc; ++j) {
          QVec phi = zeros<Rational>(da, 1), y = zeros<Rational>(dc, 1);
          phi(i) = Rational(1);
          y(j) = Rational(1);
          const QVec lhs = bn * cup_chain(s, p, phi, q, y);
          const QVec rhs = cup_chain(s, p + 1, bp * phi, q, y) + sign * cup_chain(s, p, phi, q + 1, bq * y);
          leib.sample();
          if (lhs != rhs) leib.fail("φ=e" + std::to_string(i) + ", y=e" + std::to_string(j), vec_text(rhs), vec_text(lhs));
        }
    } else {
      leib.note = "needs top >= " + std::to_string(p + q + 2);
    }
    r.add(leib);
    Verdict zero("φ ⊔ 0 = 0 at " + bd);
    for (Index i = 0; i < zp.cols(); ++i) {
      zero.sample();
      const auto dq = s.coalg.dims[static_cast<std::size_t>(q)];
      if (!is_zero(cup(s, p, zp.col(i), q, zeros<Rational>(dq, 1)).value)) zero.fail("φ=z" + std::to_string(i));
    }
    r.add(zero);
  }
  return r;
}

}  // namespace hopfcyc
