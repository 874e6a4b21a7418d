#include "hopfcyc/cocyclic.hpp"

#include "hopfcyc/errors.hpp"

#include <optional>

namespace hopfcyc {

namespace {

std::vector<AlgebraPtr> chain_legs(const AlgebraPtr& m, const AlgebraPtr& c, int n) {
  std::vector<AlgebraPtr> legs{m};
  for (int k = 0; k <= n; ++k) legs.push_back(c);
  return legs;
}

std::vector<AlgebraPtr> out_legs(const TensorElt& x, std::size_t drop_or_add_at, int delta) {
  auto legs = x.leg_algebras();
  if (delta > 0) legs.insert(legs.begin() + static_cast<long>(drop_or_add_at), legs[drop_or_add_at]);
  if (delta < 0) legs.erase(legs.begin() + static_cast<long>(drop_or_add_at));
  return legs;
}

}  // namespace

// ---------------------------------------------------------------- coalgebra side

TensorElt coface(const ModuleComodule& M, const ModuleCoalgebra& C, const TensorElt& x, int i) {
  const int n = static_cast<int>(x.legs()) - 2;
  if (n < 0) structural_error("coface: chain needs an M leg and at least one C leg");
  if (i < 0 || i > n + 1) structural_error("coface index out of range");
  if (i <= n) return leg_apply(x, static_cast<std::size_t>(i) + 1, C.C->delta_map());
  // m<0> ⊗ c_0(2) ⊗ c_1 ⊗ ... ⊗ c_n ⊗ m<-1> c_0(1)
  return map_terms(x, out_legs(x, 1, 1), [&](const std::vector<Word>& t) {
    TensorElt out(out_legs(x, 1, 1));
    const TensorElt dc = C.C->coproduct_word(t[1]);
    for (const auto& [hs, a] : M.coact_word(t[0]).terms())
      for (const auto& [cs, b] : dc.terms()) {
        std::vector<AlgElt> parts{AlgElt::word(M.M, hs[1]), AlgElt::word(C.V, cs[1])};
        for (std::size_t k = 2; k < t.size(); ++k) parts.push_back(AlgElt::word(C.V, t[k]));
        parts.push_back(C.act_word(hs[0], cs[0]));
        out += (a * b) * tensor(parts);
      }
    return out;
  });
}

TensorElt codegeneracy(const ModuleComodule&, const ModuleCoalgebra& C, const TensorElt& x, int i) {
  const int n = static_cast<int>(x.legs()) - 2;
  if (i < 0 || i >= n) structural_error("codegeneracy index out of range");
  return leg_apply(x, static_cast<std::size_t>(i) + 2, C.C->counit_map());
}

TensorElt cyclic_operator(const ModuleComodule& M, const ModuleCoalgebra& C, const TensorElt& x) {
  if (x.legs() < 2) structural_error("cyclic operator: chain needs an M leg and at least one C leg");
  return map_terms(x, x.leg_algebras(), [&](const std::vector<Word>& t) {
    TensorElt out(x.leg_algebras());
    for (const auto& [hs, a] : M.coact_word(t[0]).terms()) {
      std::vector<AlgElt> parts{AlgElt::word(M.M, hs[1])};
      for (std::size_t k = 2; k < t.size(); ++k) parts.push_back(AlgElt::word(C.V, t[k]));
      parts.push_back(C.act_word(hs[0], t[1]));
      out += a * tensor(parts);
    }
    return out;
  });
}

// ---------------------------------------------------------------- algebra side

TensorElt merge_face(const ModuleComodule& M, const ModuleAlgebra& A, const TensorElt& x, int i) {
  const int n = static_cast<int>(x.legs()) - 2;
  if (n < 1) structural_error("merge_face needs at least two algebra legs");
  if (i < 0 || i > n) structural_error("merge_face index out of range");
  if (i < n) return merge_legs(x, static_cast<std::size_t>(i) + 1);
  const HopfAlgebra& H = *M.H;
  auto legs = out_legs(x, 1, -1);
  // m<0> ⊗ (S^-1(m<-1>) a_n) a_0 ⊗ a_1 ⊗ ... ⊗ a_{n-1}
  return map_terms(x, legs, [&](const std::vector<Word>& t) {
    TensorElt out(legs);
    for (const auto& [hs, c] : M.coact_word(t[0]).terms()) {
      const AlgElt an = A.act(H.antipode_inverse_word(hs[0]), AlgElt::word(A.V, t.back()));
      std::vector<AlgElt> parts{AlgElt::word(M.M, hs[1]), an * AlgElt::word(A.V, t[1])};
      for (std::size_t k = 2; k + 1 < t.size(); ++k) parts.push_back(AlgElt::word(A.V, t[k]));
      out += c * tensor(parts);
    }
    return out;
  });
}

TensorElt insert_unit(const ModuleComodule&, const ModuleAlgebra& A, const TensorElt& x, int i) {
  const int n = static_cast<int>(x.legs()) - 2;
  if (i < 0 || i > n) structural_error("insert_unit index out of range");
  const auto pos = static_cast<std::size_t>(i) + 2;
  auto legs = out_legs(x, pos - 1, 1);
  const AlgElt one = AlgElt::one(A.V);
  return map_terms(x, legs, [&](const std::vector<Word>& t) {
    std::vector<AlgElt> parts;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (k == pos) parts.push_back(one);
      parts.push_back(AlgElt::word(legs[k < pos ? k : k + 1], t[k]));
    }
    if (pos == t.size()) parts.push_back(one);
    return tensor(parts);
  });
}

TensorElt cyclic_shift(const ModuleComodule& M, const ModuleAlgebra& A, const TensorElt& x) {
  if (x.legs() < 2) structural_error("cyclic_shift: chain needs an M leg and at least one A leg");
  const HopfAlgebra& H = *M.H;
  return map_terms(x, x.leg_algebras(), [&](const std::vector<Word>& t) {
    TensorElt out(x.leg_algebras());
    for (const auto& [hs, c] : M.coact_word(t[0]).terms()) {
      std::vector<AlgElt> parts{AlgElt::word(M.M, hs[1]),
                                A.act(H.antipode_inverse_word(hs[0]), AlgElt::word(A.V, t.back()))};
      for (std::size_t k = 1; k + 1 < t.size(); ++k) parts.push_back(AlgElt::word(A.V, t[k]));
      out += c * tensor(parts);
    }
    return out;
  });
}

TensorElt right_action(const ModuleComodule& M, const ModuleAlgebra& A, const TensorElt& x, const Word& h) {
  const HopfAlgebra& H = *M.H;
  TensorElt out(x.leg_algebras());
  for (const auto& [hs, c] : H.coproduct_word(h).terms()) {
    const AlgElt s = H.antipode_word(hs[1]);
    for (const auto& [t, a] : x.terms()) {
      const std::vector<AlgebraPtr> rest(x.leg_algebras().begin() + 1, x.leg_algebras().end());
      const std::vector<Word> tail(t.begin() + 1, t.end());
      out += (c * a) * tensor(as_tensor(M.act_word(t[0], hs[0])), A.act_diag(s, TensorElt::basis(rest, tail), 0));
    }
  }
  return out;
}

// ---------------------------------------------------------------- finite spaces

std::string matrix_text(const QMat& m) {
  std::string s = "[";
  for (Index i = 0; i < m.rows(); ++i) {
    if (i) s += "; ";
    for (Index j = 0; j < m.cols(); ++j) s += (j ? " " : "") + m(i, j).str();
  }
  return s + "]";
}

const std::vector<Word>& finite_words(const AlgebraPtr& a) {
  static const std::vector<Word> ground{Word{}};
  if (a->is_finite()) return a->finite_basis();
  if (a->alphabet().families().empty()) return ground;
  precondition_error(a->name() + " is not finite-dimensional");
}

QVec RelativeTensorSpace::encode(const TensorElt& t) const {
  QVec v = zeros<Rational>(ambient_dim(), 1);
  for (const auto& [w, c] : t.terms()) {
    auto it = index.find(w);
    if (it == index.end()) structural_error("encode: tuple outside the ambient basis");
    v(it->second) = c;
  }
  return v;
}

TensorElt RelativeTensorSpace::decode(const QVec& v) const {
  TensorElt t(legs);
  for (Index j = 0; j < ambient_dim(); ++j)
    if (!v(j).is_zero()) t.add(basis[static_cast<std::size_t>(j)], v(j));
  return t;
}

TensorElt RelativeTensorSpace::basis_tensor(Index j) const {
  return TensorElt::basis(legs, basis[static_cast<std::size_t>(j)]);
}

void RelativeTensorSpace::set_relations(const QMat& columns) {
  relations = columns.cols() == 0 ? QMat(ambient_dim(), 0) : column_basis(columns);
  quotient = quotient_by(relations, ambient_dim());
}

bool RelativeTensorSpace::in_relations(const TensorElt& t) const { return is_zero(project(t)); }

RelativeTensorSpace ambient_space(const std::vector<AlgebraPtr>& legs, int n) {
  RelativeTensorSpace sp;
  sp.n = n;
  sp.legs = legs;
  std::vector<std::vector<Word>> out{{}};
  for (const auto& l : legs) {
    std::vector<std::vector<Word>> next;
    for (const auto& prefix : out)
      for (const auto& w : finite_words(l)) {
        auto t = prefix;
        t.push_back(w);
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  sp.basis = std::move(out);
  for (std::size_t j = 0; j < sp.basis.size(); ++j) sp.index[sp.basis[j]] = static_cast<Index>(j);
  sp.set_relations(QMat(sp.ambient_dim(), 0));
  return sp;
}

namespace {

void set_relations(RelativeTensorSpace& sp, const std::vector<TensorElt>& rels) {
  QMat R = zeros<Rational>(sp.ambient_dim(), static_cast<Index>(rels.size()));
  for (std::size_t k = 0; k < rels.size(); ++k) R.col(static_cast<Index>(k)) = sp.encode(rels[k]);
  sp.set_relations(R);
}

}  // namespace

RelativeTensorSpace relative_tensor(const ModuleComodule& M, const ModuleCoalgebra& C, int n) {
  auto sp = ambient_space(chain_legs(M.M, C.V, n), n);
  std::vector<TensorElt> rels;
  const std::vector<AlgebraPtr> clegs(sp.legs.begin() + 1, sp.legs.end());
  for (const auto& h : finite_words(M.H->algebra())) {
    if (h.empty()) continue;
    for (Index j = 0; j < sp.ambient_dim(); ++j) {
      const auto& t = sp.basis[static_cast<std::size_t>(j)];
      const std::vector<Word> tail(t.begin() + 1, t.end());
      TensorElt r = tensor(as_tensor(M.act_word(t[0], h)), TensorElt::basis(clegs, tail));
      r -= C.act_diag(h, sp.basis_tensor(j), 1);
      if (!r.is_zero()) rels.push_back(std::move(r));
    }
  }
  set_relations(sp, rels);
  return sp;
}

RelativeTensorSpace balanced_algebra_space(const ModuleComodule& M, const ModuleAlgebra& A, int n) {
  auto sp = ambient_space(chain_legs(M.M, A.V, n), n);
  std::vector<TensorElt> rels;
  for (const auto& h : finite_words(M.H->algebra())) {
    if (h.empty()) continue;
    const Rational eh = M.H->counit_word(h);
    for (Index j = 0; j < sp.ambient_dim(); ++j) {
      const TensorElt x = sp.basis_tensor(j);
      TensorElt r = right_action(M, A, x, h) - eh * x;
      if (!r.is_zero()) rels.push_back(std::move(r));
    }
  }
  set_relations(sp, rels);
  return sp;
}

QMat ambient_matrix(const RelativeTensorSpace& from, const RelativeTensorSpace& to,
                    const std::function<TensorElt(const TensorElt&)>& op) {
  QMat A = zeros<Rational>(to.ambient_dim(), from.ambient_dim());
  for (Index j = 0; j < from.ambient_dim(); ++j) A.col(j) = to.encode(op(from.basis_tensor(j)));
  return A;
}

// ---------------------------------------------------------------- instances

namespace {

/// P_to A L_from, recording whether A maps relations into relations.
QMat induce(const RelativeTensorSpace& from, const RelativeTensorSpace& to, const QMat& A, Verdict& wd,
            const std::string& witness) {
  wd.sample();
  if (from.relations.cols() > 0) {
    const QMat leak = to.quotient.P * A * from.relations;
    if (!is_zero(leak)) wd.fail(witness, "0", "relation mapped outside the relation subspace");
  }
  return to.quotient.P * A * from.quotient.L;
}

void size_instance(CocyclicInstance& inst, int top) {
  inst.top = top;
  inst.cofaces.assign(static_cast<std::size_t>(top), {});
  inst.codegeneracies.assign(static_cast<std::size_t>(top), {});
  inst.tau.assign(static_cast<std::size_t>(top) + 1, QMat());
}

}  // namespace

CocyclicInstance induced_instance(const std::string& name, const std::string& side,
                                  const std::vector<RelativeTensorSpace>& sp, const ChainOperators& ops) {
  if (sp.empty()) usage_error("no spaces");
  CocyclicInstance inst;
  inst.name = name;
  inst.side = side;
  const int top = static_cast<int>(sp.size()) - 1;
  size_instance(inst, top);
  for (const auto& s : sp) inst.dims.push_back(s.dim());
  Verdict wf("cofaces well defined"), ws("codegeneracies well defined"), wt("τ well defined");
  for (int n = 0; n <= top; ++n) {
    const auto& s = sp[static_cast<std::size_t>(n)];
    inst.tau[static_cast<std::size_t>(n)] =
        induce(s, s, ambient_matrix(s, s, ops.tau), wt, "n=" + std::to_string(n));
    if (n == top) break;
    const auto& u = sp[static_cast<std::size_t>(n) + 1];
    for (int i = 0; i <= n + 1; ++i)
      inst.cofaces[static_cast<std::size_t>(n)].push_back(
          induce(s, u, ambient_matrix(s, u, [&](const TensorElt& x) { return ops.coface(x, i); }), wf,
                 "n=" + std::to_string(n) + ", i=" + std::to_string(i)));
    for (int i = 0; i <= n; ++i)
      inst.codegeneracies[static_cast<std::size_t>(n)].push_back(
          induce(u, s, ambient_matrix(u, s, [&](const TensorElt& x) { return ops.codegeneracy(x, i); }), ws,
                 "n=" + std::to_string(n) + ", i=" + std::to_string(i)));
  }
  for (auto* v : {&wf, &ws, &wt}) inst.construction.add(*v);
  inst.construction.subject = inst.name;
  return inst;
}

ChainOperators coalgebra_operators(const ModuleComodule& M, const ModuleCoalgebra& C) {
  ChainOperators ops;
  ops.coface = [&M, &C](const TensorElt& x, int i) { return coface(M, C, x, i); };
  ops.codegeneracy = [&M, &C](const TensorElt& x, int i) { return codegeneracy(M, C, x, i); };
  ops.tau = [&M, &C](const TensorElt& x) { return cyclic_operator(M, C, x); };
  return ops;
}

CocyclicInstance coalgebra_instance(const ModuleComodule& M, const ModuleCoalgebra& C, int top,
                                    const std::string& name) {
  if (top < 0) usage_error("negative degree");
  std::vector<RelativeTensorSpace> sp;
  for (int n = 0; n <= top; ++n) sp.push_back(relative_tensor(M, C, n));
  return induced_instance(name.empty() ? M.name + " over " + C.name : name, "coalgebra", sp,
                          coalgebra_operators(M, C));
}

CocyclicInstance algebra_instance(const ModuleComodule& M, const ModuleAlgebra& A, int top, const std::string& name) {
  if (top < 0) usage_error("negative degree");
  CocyclicInstance inst;
  inst.name = name.empty() ? M.name + " over " + A.name : name;
  inst.side = "algebra";
  size_instance(inst, top);
  std::vector<RelativeTensorSpace> sp;
  for (int n = 0; n <= top; ++n) {
    sp.push_back(balanced_algebra_space(M, A, n));
    inst.dims.push_back(sp.back().dim());
  }
  Verdict wf("cofaces well defined"), ws("codegeneracies well defined"), wt("τ well defined");
  // Chain maps go against the cochain direction; cochain operators are transposes.
  for (int n = 0; n <= top; ++n) {
    const auto& s = sp[static_cast<std::size_t>(n)];
    inst.tau[static_cast<std::size_t>(n)] =
        induce(s, s, ambient_matrix(s, s, [&](const TensorElt& x) { return cyclic_shift(M, A, x); }), wt,
               "n=" + std::to_string(n))
            .transpose();
    if (n == top) break;
    const auto& u = sp[static_cast<std::size_t>(n) + 1];
    for (int i = 0; i <= n + 1; ++i)
      inst.cofaces[static_cast<std::size_t>(n)].push_back(
          induce(u, s, ambient_matrix(u, s, [&](const TensorElt& x) { return merge_face(M, A, x, i); }), wf,
                 "n=" + std::to_string(n) + ", i=" + std::to_string(i))
              .transpose());
    for (int i = 0; i <= n; ++i)
      inst.codegeneracies[static_cast<std::size_t>(n)].push_back(
          induce(s, u, ambient_matrix(s, u, [&](const TensorElt& x) { return insert_unit(M, A, x, i); }), ws,
                 "n=" + std::to_string(n) + ", i=" + std::to_string(i))
              .transpose());
  }
  for (auto* v : {&wf, &ws, &wt}) inst.construction.add(*v);
  inst.construction.subject = inst.name;
  return inst;
}

CocyclicInstance point_instance(int top) {
  CocyclicInstance inst;
  inst.name = "point";
  inst.side = "custom";
  size_instance(inst, top);
  const QMat one = identity<Rational>(1);
  for (int n = 0; n <= top; ++n) {
    inst.dims.push_back(1);
    inst.tau[static_cast<std::size_t>(n)] = one;
    if (n == top) break;
    inst.cofaces[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 2, one);
    inst.codegeneracies[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, one);
  }
  inst.construction.subject = inst.name;
  return inst;
}

// ---------------------------------------------------------------- identities

namespace {

enum class OpKind { Coface, Codegeneracy, Tau };
struct Op {
  OpKind kind;
  int i = 0;
};

/// One identity: apply `lhs` (first element first) and `rhs` to C^source.
struct Identity {
  std::string check;
  std::string witness;
  int source;
  std::vector<Op> lhs, rhs;
};

Op d(int i) { return {OpKind::Coface, i}; }
Op s(int i) { return {OpKind::Codegeneracy, i}; }
Op t() { return {OpKind::Tau, 0}; }

std::string wit(int n, int i, int j = -1) {
  std::string r = "n=" + std::to_string(n) + ", i=" + std::to_string(i);
  if (j >= 0) r += ", j=" + std::to_string(j);
  return r;
}

/// Identities whose intermediate degrees stay within [0, top].
std::vector<Identity> identities(int top) {
  std::vector<Identity> out;
  for (int n = 0; n + 2 <= top; ++n)
    for (int j = 1; j <= n + 2; ++j)
      for (int i = 0; i < j; ++i) out.push_back({"coface-coface", wit(n, i, j), n, {d(i), d(j)}, {d(j - 1), d(i)}});
  for (int n = 0; n + 2 <= top; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        out.push_back({"codegeneracy-codegeneracy", wit(n, i, j), n + 2, {s(i), s(j)}, {s(j + 1), s(i)}});
  for (int n = 0; n + 1 <= top; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        Identity id{"codegeneracy-coface", wit(n, i, j), n, {d(i), s(j)}, {}};
        if (i < j) {
          if (n < 1) continue;
          id.rhs = {s(j - 1), d(i)};
        } else if (i > j + 1) {
          if (n < 1) continue;
          id.rhs = {s(j), d(i - 1)};
        }
        out.push_back(id);
      }
  for (int n = 0; n + 1 <= top; ++n) {
    out.push_back({"last coface = τ∂₀", wit(n, 0), n, {d(0), t()}, {d(n + 1)}});
    for (int i = 1; i <= n + 1; ++i) out.push_back({"cyclic-coface", wit(n, i), n, {d(i), t()}, {t(), d(i - 1)}});
    for (int i = 0; i <= n; ++i) {
      Identity id{"cyclic-codegeneracy", wit(n, i), n + 1, {s(i), t()}, {}};
      id.rhs = i == 0 ? std::vector<Op>{t(), t(), s(n)} : std::vector<Op>{t(), s(i - 1)};
      out.push_back(id);
    }
  }
  for (int n = 0; n <= top; ++n) {
    Identity id{"τ^(n+1) = id", "n=" + std::to_string(n), n, {}, {}};
    id.lhs.assign(static_cast<std::size_t>(n) + 1, t());
    out.push_back(id);
  }
  return out;
}

const std::vector<std::string> kIdentityChecks{"coface-coface",   "codegeneracy-codegeneracy", "codegeneracy-coface",
                                               "last coface = τ∂₀", "cyclic-coface",             "cyclic-codegeneracy",
                                               "τ^(n+1) = id"};

QMat compose(const CocyclicInstance& inst, int source, const std::vector<Op>& ops) {
  QMat m = identity<Rational>(inst.dims[static_cast<std::size_t>(source)]);
  int deg = source;
  for (const auto& op : ops) {
    const auto k = static_cast<std::size_t>(deg);
    switch (op.kind) {
      case OpKind::Coface:
        m = inst.cofaces[k][static_cast<std::size_t>(op.i)] * m;
        ++deg;
        break;
      case OpKind::Codegeneracy:
        m = inst.codegeneracies[k - 1][static_cast<std::size_t>(op.i)] * m;
        --deg;
        break;
      case OpKind::Tau:
        m = inst.tau[k] * m;
        break;
    }
  }
  return m;
}


}  // namespace

CheckReport check_cocyclic(CocyclicInstance& inst) {
  CheckReport rep;
  rep.subject = inst.name;
  std::map<std::string, Verdict> vs;
  for (const auto& c : kIdentityChecks) vs.emplace(c, Verdict(c));
  for (const auto& id : identities(inst.top)) {
    auto& v = vs.at(id.check);
    v.sample();
    const QMat l = compose(inst, id.source, id.lhs), r = compose(inst, id.source, id.rhs);
    if (!(l == r)) v.fail(id.witness, matrix_text(r), matrix_text(l), matrix_text(l - r));
  }
  rep.append(inst.construction);
  for (const auto& c : kIdentityChecks) rep.add(vs.at(c));
  inst.verified = rep.passed();
  return rep;
}

CheckReport check_cocyclic_symbolic(const ModuleComodule& M, const ModuleCoalgebra& C, int max_n, const Samples& smp) {
  CheckReport rep;
  rep.subject = M.name + " over " + C.name + " (sampled)";
  const int bound = std::max({smp.m_degree, smp.h_degree, smp.c_degree});
  std::map<int, TupleSpan> spans;
  auto in_rel = [&](const TensorElt& x) {
    if (x.is_zero()) return true;
    const int k = static_cast<int>(x.legs()) - 1;
    auto it = spans.find(k);
    if (it == spans.end()) it = spans.emplace(k, coalgebra_relation_span(M, C, k, bound)).first;
    return it->second.contains(x.terms());
  };
  auto apply = [&](TensorElt x, const std::vector<Op>& ops) {
    for (const auto& op : ops) {
      switch (op.kind) {
        case OpKind::Coface:
          x = coface(M, C, x, op.i);
          break;
        case OpKind::Codegeneracy:
          x = codegeneracy(M, C, x, op.i);
          break;
        case OpKind::Tau:
          x = cyclic_operator(M, C, x);
          break;
      }
    }
    return x;
  };
  std::map<std::string, Verdict> vs;
  for (const auto& c : kIdentityChecks) vs.emplace(c, Verdict(c));
  std::map<int, std::vector<std::vector<Word>>> samples;
  auto samples_at = [&](int n) -> const std::vector<std::vector<Word>>& {
    auto it = samples.find(n);
    if (it == samples.end()) {
      std::vector<std::vector<Word>> out;
      std::vector<AlgebraPtr> clegs(static_cast<std::size_t>(n) + 1, C.V);
      for (const auto& m : M.M->basis_up_to(smp.m_degree))
        for (const auto& ct : basis_tuples(clegs, smp.c_degree)) {
          std::vector<Word> t{m};
          t.insert(t.end(), ct.begin(), ct.end());
          out.push_back(std::move(t));
        }
      it = samples.emplace(n, std::move(out)).first;
    }
    return it->second;
  };
  for (const auto& id : identities(max_n)) {
    auto& v = vs.at(id.check);
    const auto legs = chain_legs(M.M, C.V, id.source);
    for (const auto& t : samples_at(id.source)) {
      v.sample();
      const TensorElt x = TensorElt::basis(legs, t);
      const TensorElt diff = apply(x, id.lhs) - apply(x, id.rhs);
      if (!in_rel(diff)) {
        std::string w = id.witness + ", x=";
        for (std::size_t k = 0; k < t.size(); ++k) w += (k ? " ⊗ " : "") + legs[k]->format_word(t[k], false);
        v.fail(w, "0 in the balanced tensor product", diff.str(), diff.str(), diff.str(true));
        break;
      }
    }
  }
  Verdict wt("τ well defined");
  for (int n = 0; n <= max_n; ++n) {
    const auto legs = chain_legs(M.M, C.V, n);
    const std::vector<AlgebraPtr> clegs(legs.begin() + 1, legs.end());
    for (const auto& h : M.H->algebra()->basis_up_to(smp.h_degree)) {
      if (h.empty()) continue;
      for (const auto& t : samples_at(n)) {
        const std::vector<Word> tail(t.begin() + 1, t.end());
        const TensorElt r = tensor(as_tensor(M.act_word(t[0], h)), TensorElt::basis(clegs, tail)) -
                            C.act_diag(h, TensorElt::basis(legs, t), 1);
        wt.sample();
        const TensorElt tr = cyclic_operator(M, C, r);
        if (!in_rel(tr)) {
          wt.fail("n=" + std::to_string(n) + ", h=" + M.H->algebra()->format_word(h, false), "0", tr.str(), tr.str(),
                  tr.str(true));
          break;
        }
      }
    }
  }
  for (const auto& c : kIdentityChecks) rep.add(vs.at(c));
  rep.add(wt);
  return rep;
}

// ---------------------------------------------------------------- cohomology

QMat hochschild_coboundary(const CocyclicInstance& inst, int n) {
  const auto& f = inst.cofaces.at(static_cast<std::size_t>(n));
  QMat b = zeros<Rational>(inst.dims[static_cast<std::size_t>(n) + 1], inst.dims[static_cast<std::size_t>(n)]);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i % 2 == 0)
      b += f[i];
    else
      b -= f[i];
  }
  return b;
}

QMat cyclic_lambda(const CocyclicInstance& inst, int n) {
  QMat l = inst.tau.at(static_cast<std::size_t>(n));
  if (n % 2 != 0) l = -l;
  return l;
}

namespace {

QMat b_prime(const CocyclicInstance& inst, int n) {
  const auto& f = inst.cofaces.at(static_cast<std::size_t>(n));
  QMat b = zeros<Rational>(inst.dims[static_cast<std::size_t>(n) + 1], inst.dims[static_cast<std::size_t>(n)]);
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    if (i % 2 == 0)
      b += f[i];
    else
      b -= f[i];
  }
  return b;
}

long rank_of(const QMat& m) { return m.rows() == 0 || m.cols() == 0 ? 0 : static_cast<long>(rank(m)); }

void require(const CocyclicInstance& inst, int upto) {
  if (upto < 0) usage_error("negative degree");
  if (upto + 1 > inst.top)
    precondition_error("instance " + inst.name + " is built to degree " + std::to_string(inst.top) +
                       "; degree " + std::to_string(upto + 1) + " is needed");
}

}  // namespace

std::vector<long> hochschild_dims(const CocyclicInstance& inst, int upto) {
  require(inst, upto);
  std::vector<long> out;
  long prev = 0;
  for (int n = 0; n <= upto; ++n) {
    const long r = rank_of(hochschild_coboundary(inst, n));
    out.push_back(static_cast<long>(inst.dims[static_cast<std::size_t>(n)]) - r - prev);
    prev = r;
  }
  return out;
}

std::vector<long> cyclic_dims_lambda(const CocyclicInstance& inst, int upto) {
  require(inst, upto);
  std::vector<long> out;
  long prev = 0;
  for (int n = 0; n <= upto; ++n) {
    const auto dn = inst.dims[static_cast<std::size_t>(n)];
    const QMat K = nullspace(QMat(identity<Rational>(dn) - cyclic_lambda(inst, n)));
    const long r = K.cols() == 0 ? 0 : rank_of(QMat(hochschild_coboundary(inst, n) * K));
    out.push_back(static_cast<long>(K.cols()) - r - prev);
    prev = r;
  }
  return out;
}

std::vector<long> cyclic_dims_bicomplex(const CocyclicInstance& inst, int upto, bool* square_zero) {
  require(inst, upto);
  auto dim = [&](int q) { return inst.dims[static_cast<std::size_t>(q)]; };
  // Tot^k = ⊕_{p+q=k} C^q, blocks ordered by p.
  auto offsets = [&](int k) {
    std::vector<Index> off{0};
    for (int p = 0; p <= k; ++p) off.push_back(off.back() + dim(k - p));
    return off;
  };
  auto total = [&](int k) {
    const auto off = offsets(k);
    const auto ok = offsets(k + 1);
    QMat D = zeros<Rational>(ok.back(), off.back());
    for (int p = 0; p <= k; ++p) {
      const int q = k - p;
      const auto col = off[static_cast<std::size_t>(p)];
      // vertical: (p, q) -> (p, q + 1)
      const QMat v = p % 2 == 0 ? hochschild_coboundary(inst, q) : QMat(-b_prime(inst, q));
      D.block(ok[static_cast<std::size_t>(p)], col, v.rows(), v.cols()) += v;
      // horizontal: (p, q) -> (p + 1, q)
      const QMat lam = cyclic_lambda(inst, q);
      QMat h;
      if (p % 2 == 0) {
        h = identity<Rational>(dim(q)) - lam;
      } else {
        h = zeros<Rational>(dim(q), dim(q));
        QMat pw = identity<Rational>(dim(q));
        for (int j = 0; j <= q; ++j) {
          h += pw;
          pw = lam * pw;
        }
      }
      D.block(ok[static_cast<std::size_t>(p) + 1], col, h.rows(), h.cols()) += h;
    }
    return D;
  };
  std::vector<long> out;
  bool sq = true;
  long prev = 0;
  QMat last;
  for (int k = 0; k <= upto; ++k) {
    const QMat D = total(k);
    if (k > 0 && !is_zero(QMat(D * last))) sq = false;
    const long r = rank_of(D);
    out.push_back(static_cast<long>(D.cols()) - r - prev);
    prev = r;
    last = D;
  }
  if (square_zero) *square_zero = sq;
  return out;
}

CohomologyTable cyclic_cohomology(const CocyclicInstance& inst, int upto) {
  if (!inst.verified) precondition_error("cocyclic identities of " + inst.name + " have not been verified");
  CohomologyTable t;
  t.hh = hochschild_dims(inst, upto);
  t.hc = cyclic_dims_lambda(inst, upto);
  t.hc_bicomplex = cyclic_dims_bicomplex(inst, upto, &t.bicomplex_square_zero);
  return t;
}

// ---------------------------------------------------------------- export

nlohmann::ordered_json matrix_json(const QMat& m) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  auto entries = nlohmann::ordered_json::array();
  for (Index c = 0; c < m.cols(); ++c)
    for (Index r = 0; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) entries.push_back({r, c, m(r, c).str()});
  j["entries"] = entries;
  return j;
}

nlohmann::ordered_json instance_json(const CocyclicInstance& inst) {
  nlohmann::ordered_json j;
  j["name"] = inst.name;
  j["side"] = inst.side;
  j["top"] = inst.top;
  auto degrees = nlohmann::ordered_json::array();
  for (int n = 0; n <= inst.top; ++n) {
    nlohmann::ordered_json d;
    d["n"] = n;
    d["dim"] = inst.dims[static_cast<std::size_t>(n)];
    d["tau"] = matrix_json(inst.tau[static_cast<std::size_t>(n)]);
    if (n < inst.top) {
      auto f = nlohmann::ordered_json::array();
      for (const auto& m : inst.cofaces[static_cast<std::size_t>(n)]) f.push_back(matrix_json(m));
      d["cofaces"] = f;
      auto s = nlohmann::ordered_json::array();
      for (const auto& m : inst.codegeneracies[static_cast<std::size_t>(n)]) s.push_back(matrix_json(m));
      d["codegeneracies"] = s;
    }
    degrees.push_back(d);
  }
  j["degrees"] = degrees;
  return j;
}

}  // namespace hopfcyc
