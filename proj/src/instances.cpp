#include "hopfcyc/instances.hpp"

#include "hopfcyc/errors.hpp"

#include "json.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace hopfcyc {

namespace {

LetterPattern letter(std::string n, IndexExpr i = IndexExpr::none()) { return LetterPattern{std::move(n), std::move(i)}; }

PatternTerm pterm(Rational c, std::vector<LetterPattern> w) { return PatternTerm{CoeffExpr{std::move(c), {}}, std::move(w)}; }

TupleTerms tensor_terms(const TensorElt& t) { return t.terms(); }

bool only_family(const Alphabet& a, const std::vector<Word>& words, const std::string& name) {
  for (const auto& w : words)
    for (const auto& g : w)
      if (g.name != name || !a.contains(g)) return false;
  return true;
}

}  // namespace

HopfPtr build_h1cop() { return build_hopf(h1cop_spec()); }

HopfSpec u_spec() {
  HopfSpec s;
  s.name = "U";
  s.families = {GeneratorFamily{"Y", false, 1, -1, false, 1, "Y"}, GeneratorFamily{"X", false, 1, -1, false, 1, "X"}};
  RewriteRule r;
  r.lhs = {letter("X"), letter("Y")};
  r.rhs = {pterm(1, {letter("Y"), letter("X")}), pterm(-1, {letter("X")})};
  s.rules = {r};
  for (const char* g : {"Y", "X"}) {
    s.coproduct.push_back(CoproductEntry{letter(g), {TensorPatternTerm{CoeffExpr{1, {}}, {{letter(g)}, {}}},
                                                     TensorPatternTerm{CoeffExpr{1, {}}, {{}, {letter(g)}}}}});
    s.counit.push_back(CounitEntry{letter(g), CoeffExpr{0, {}}});
    s.antipode.push_back(AntipodeEntry{letter(g), {pterm(-1, {letter(g)})}});
  }
  return s;
}

HopfPtr build_U() { return build_hopf(u_spec()); }

HopfPtr build_F(const HopfPtr& h1cop) {
  const auto* fam = h1cop->algebra()->alphabet().find("d");
  if (!fam) structural_error("H1cop has no δ family");
  RewriteRule comm;
  comm.lhs = {letter("d", IndexExpr::variable("k")), letter("d", IndexExpr::variable("i"))};
  comm.rhs = {pterm(1, {letter("d", IndexExpr::variable("i")), letter("d", IndexExpr::variable("k"))})};
  comm.conditions = {Condition{"k", Condition::Op::Gt, IndexExpr::variable("i")}};
  auto alg = Algebra::presented("F", Alphabet({*fam}), {comm});
  auto provider = [h1cop](const HopfAlgebra& F, const Generator& g) {
    GeneratorData d;
    const TensorElt D = h1cop->gen_coproduct(g);
    for (const auto& [legs, c] : D.terms())
      if (!only_family(F.algebra()->alphabet(), legs, "d"))
        structural_error("coproduct of a δ generator leaves the δ subalgebra");
    d.coproduct = tensor_terms(D);
    d.counit = h1cop->gen_counit(g);
    const AlgElt s = h1cop->gen_antipode(g);
    for (const auto& [w, c] : s.terms())
      if (!only_family(F.algebra()->alphabet(), {w}, "d")) structural_error("antipode of a δ generator leaves the δ subalgebra");
    d.antipode = s.terms();
    return d;
  };
  return std::make_shared<HopfAlgebra>("F", alg, provider);
}

// ---------------------------------------------------------------- matched pairs

MatchedPair::MatchedPair(MatchedPairData d) : d_(std::move(d)) {
  for (const auto& uf : d_.U->algebra()->alphabet().families())
    if (d_.F->algebra()->alphabet().find(uf.name))
      structural_error("matched pair: generator family " + uf.name + " occurs in both factors");
}

AlgElt MatchedPair::gen_act(const Generator& u, const Generator& f) const {
  return AlgElt(d_.F->algebra(), d_.action(u, f));
}

TensorElt MatchedPair::gen_coact(const Generator& u) const {
  return normalized_tensor({d_.U->algebra(), d_.F->algebra()}, d_.coaction(u));
}

AlgElt MatchedPair::act(const Word& u, const Word& f) const {
  const auto& FA = d_.F->algebra();
  if (u.empty()) return AlgElt::word(FA, f);
  const auto key = std::make_pair(u, f);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = act_cache_.find(key);
    if (it != act_cache_.end()) return it->second;
  }
  AlgElt r = AlgElt::zero(FA);
  if (u.size() > 1) {
    const Word rest(u.begin() + 1, u.end());
    for (const auto& [w, c] : act(rest, f).terms()) r += c * act(Word{u[0]}, w);
  } else if (f.empty()) {
    r = d_.U->counit_word(u) * AlgElt::one(FA);
  } else if (f.size() == 1) {
    r = gen_act(u[0], f[0]);
  } else {
    const Word f1{f[0]};
    const Word frest(f.begin() + 1, f.end());
    for (const auto& [legs, c] : d_.U->gen_coproduct(u[0]).terms()) r += c * (act(legs[0], f1) * act(legs[1], frest));
  }
  std::lock_guard<std::mutex> lock(mutex_);
  act_cache_.emplace(key, r);
  return r;
}

AlgElt MatchedPair::act(const AlgElt& u, const AlgElt& f) const {
  AlgElt r = AlgElt::zero(d_.F->algebra());
  for (const auto& [uw, uc] : u.terms())
    for (const auto& [fw, fc] : f.terms()) r += (uc * fc) * act(uw, fw);
  return r;
}

TensorElt MatchedPair::coact(const Word& u) const {
  const auto& UA = d_.U->algebra();
  const auto& FA = d_.F->algebra();
  if (u.empty()) return tensor(AlgElt::one(UA), AlgElt::one(FA));
  if (u.size() == 1) return gen_coact(u[0]);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = coact_cache_.find(u);
    if (it != coact_cache_.end()) return it->second;
  }
  const Word l{u[0]};
  const Word v(u.begin() + 1, u.end());
  const TensorElt nv = coact(v);
  TensorElt r({UA, FA});
  for (const auto& [ls, c] : d_.U->gen_coproduct(u[0]).terms()) {
    const TensorElt nl = coact(ls[0]);
    for (const auto& [a, x] : nl.terms())
      for (const auto& [b, y] : nv.terms()) {
        const AlgElt left = AlgElt::word(UA, a[0]) * AlgElt::word(UA, b[0]);
        const AlgElt right = AlgElt::word(FA, a[1]) * act(ls[1], b[1]);
        r += (c * x * y) * tensor(left, right);
      }
  }
  std::lock_guard<std::mutex> lock(mutex_);
  coact_cache_.emplace(u, r);
  return r;
}

TensorElt MatchedPair::coact(const AlgElt& u) const {
  TensorElt r({d_.U->algebra(), d_.F->algebra()});
  for (const auto& [w, c] : u.terms()) r += c * coact(w);
  return r;
}

MatchedPairData h1cop_matched_pair_data(const HopfPtr& F, const HopfPtr& U) {
  MatchedPairData d;
  d.name = "F▷◁U";
  d.F = F;
  d.U = U;
  d.action = [](const Generator& u, const Generator& f) {
    Terms t;
    if (u.name == "X") add_term(t, {Generator("d", f.index + 1)}, Rational(1));
    else if (u.name == "Y") add_term(t, {f}, Rational(f.index));
    return t;
  };
  d.coaction = [](const Generator& u) {
    TupleTerms t;
    add_term(t, {Word{u}, Word{}}, Rational(1));
    if (u.name == "X") add_term(t, {Word{Generator("Y")}, Word{Generator("d", 1)}}, Rational(1));
    return t;
  };
  return d;
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

std::string pair_witness(const Algebra& a, const Word& x, const Algebra& b, const Word& y) {
  return "(" + a.format_word(x, false) + ", " + b.format_word(y, false) + ")";
}

}  // namespace

CheckReport check_matched_pair(const MatchedPair& mp, int degree) {
  CheckReport rep;
  rep.subject = mp.name();
  const auto& F = *mp.F();
  const auto& U = *mp.U();
  const auto& FA = F.algebra();
  const auto& UA = U.algebra();
  Verdict c1("counit of action"), c2("coproduct of action"), c3("coaction of unit"), c4("coaction of products"),
      c5("action-coaction compatibility"), c6("action respects relations"), c7("coaction respects relations");
  const auto ub = UA->basis_up_to(degree);
  const auto fb = FA->basis_up_to(degree);

  expect_equal(c3, "1", mp.coact(Word{}), tensor(AlgElt::one(UA), AlgElt::one(FA)));

  for (const auto& u : ub) {
    const TensorElt Du = U.coproduct_word(u);
    for (const auto& f : fb) {
      const std::string wit = pair_witness(*UA, u, *FA, f);
      const AlgElt uf = mp.act(u, f);
      c1.sample();
      const Rational e1 = F.counit(uf), e2 = U.counit_word(u) * F.counit_word(f);
      if (e1 != e2) c1.fail(wit, e2.str(), e1.str());

      const TensorElt Df = F.coproduct_word(f);
      TensorElt rhs({FA, FA});
      TensorElt lhs5({UA, FA}), rhs5({UA, FA});
      for (const auto& [us, a] : Du.terms()) {
        const TensorElt n1 = mp.coact(us[0]);
        for (const auto& [fs, b] : Df.terms())
          for (const auto& [ns, c] : n1.terms())
            rhs += (a * b * c) * tensor(mp.act(ns[0], fs[0]), AlgElt::word(FA, ns[1]) * mp.act(us[1], fs[1]));
        // u(2)<0> ⊗ (u(1) ▹ f) u(2)<1>  vs  u(1)<0> ⊗ u(1)<1> (u(2) ▹ f)
        const TensorElt n2 = mp.coact(us[1]);
        const AlgElt u1f = mp.act(us[0], f);
        for (const auto& [ns, c] : n2.terms()) lhs5 += (a * c) * tensor(AlgElt::word(UA, ns[0]), u1f * AlgElt::word(FA, ns[1]));
        const AlgElt u2f = mp.act(us[1], f);
        for (const auto& [ns, c] : n1.terms()) rhs5 += (a * c) * tensor(AlgElt::word(UA, ns[0]), AlgElt::word(FA, ns[1]) * u2f);
      }
      expect_equal(c2, wit, F.coproduct(uf), rhs);
      expect_equal(c5, wit, lhs5, rhs5);
    }
    for (const auto& v : ub) {
      const TensorElt nv = mp.coact(v);
      TensorElt rhs({UA, FA});
      for (const auto& [us, a] : Du.terms()) {
        const TensorElt n1 = mp.coact(us[0]);
        for (const auto& [x, b] : n1.terms())
          for (const auto& [y, c] : nv.terms())
            rhs += (a * b * c) *
                   tensor(AlgElt::word(UA, x[0]) * AlgElt::word(UA, y[0]), AlgElt::word(FA, x[1]) * mp.act(us[1], y[1]));
      }
      expect_equal(c4, pair_witness(*UA, u, *UA, v), mp.coact(U.elt(u) * U.elt(v)), rhs);
    }
  }

  // Relations of U acting, and U letters acting on relations of F.
  for (const auto& [lhs, rhs] : rule_instances(UA->rules(), degree)) {
    for (const auto& f : fb) {
      AlgElt r = AlgElt::zero(FA);
      for (const auto& [w, c] : rhs) r += c * mp.act(w, f);
      expect_equal(c6, pair_witness(*UA, lhs, *FA, f), mp.act(lhs, f), r);
    }
    TensorElt r({UA, FA});
    for (const auto& [w, c] : rhs) r += c * mp.coact(w);
    expect_equal(c7, UA->alphabet().format_word(lhs, false), mp.coact(lhs), r);
  }
  for (const auto& [lhs, rhs] : rule_instances(FA->rules(), degree))
    for (const auto& l : UA->alphabet().letters_up_to(degree)) {
      AlgElt r = AlgElt::zero(FA);
      for (const auto& [w, c] : rhs) r += c * mp.act(Word{l}, w);
      expect_equal(c6, pair_witness(*UA, Word{l}, *FA, lhs), mp.act(Word{l}, lhs), r);
    }
  for (auto* v : {&c1, &c2, &c3, &c4, &c5, &c6, &c7}) rep.add(*v);
  return rep;
}

HopfPtr build_bicrossed(const MatchedPairPtr& mp) {
  const auto& FA = mp->F()->algebra();
  const auto& UA = mp->U()->algebra();
  std::vector<GeneratorFamily> fams = FA->alphabet().families();
  const int split = static_cast<int>(fams.size());
  for (const auto& f : UA->alphabet().families()) fams.push_back(f);

  std::vector<RewriteRule> rules = FA->rules().rules();
  for (const auto& r : UA->rules().rules()) rules.push_back(r);
  for (const auto& uf : UA->alphabet().families())
    for (const auto& ff : FA->alphabet().families()) {
      RewriteRule r;
      r.lhs = {letter(uf.name, uf.indexed ? IndexExpr::variable("u") : IndexExpr::none()),
               letter(ff.name, ff.indexed ? IndexExpr::variable("f") : IndexExpr::none())};
      r.label = "cross " + uf.name + " " + ff.name;
      r.producer = [mp](const Word& m) {
        Terms out;
        for (const auto& [legs, c] : mp->U()->gen_coproduct(m[0]).terms())
          for (const auto& [fw, fc] : mp->act(legs[0], Word{m[1]}).terms()) add_term(out, concat(fw, legs[1]), c * fc);
        return out;
      };
      rules.push_back(std::move(r));
    }
  auto alg = Algebra::presented(mp->name(), Alphabet(fams), rules, split);

  auto provider = [mp](const HopfAlgebra& B, const Generator& g) {
    GeneratorData d;
    const auto& F = *mp->F();
    const auto& U = *mp->U();
    if (F.algebra()->alphabet().contains(g)) {
      d.coproduct = F.gen_coproduct(g).terms();
      d.counit = F.gen_counit(g);
      d.antipode = F.gen_antipode(g).terms();
      if (F.has_inverse_table(g)) d.antipode_inverse = F.gen_antipode_inverse(g).terms();
      return d;
    }
    TupleTerms delta;
    for (const auto& [us, a] : U.gen_coproduct(g).terms())
      for (const auto& [ns, b] : mp->coact(us[0]).terms()) add_term(delta, {ns[0], concat(ns[1], us[1])}, a * b);
    d.coproduct = delta;
    d.counit = U.gen_counit(g);
    AlgElt s = AlgElt::zero(B.algebra());
    for (const auto& [ns, b] : mp->coact(Word{g}).terms()) {
      const AlgElt su = U.antipode_word(ns[0]);
      const AlgElt sf = F.antipode_word(ns[1]);
      Terms raw;
      for (const auto& [x, c] : su.terms())
        for (const auto& [y, e] : sf.terms()) add_term(raw, concat(x, y), b * c * e);
      s += AlgElt(B.algebra(), raw);
    }
    d.antipode = s.terms();
    return d;
  };
  return std::make_shared<HopfAlgebra>(mp->name(), alg, provider);
}

CheckReport check_same_structure(const HopfAlgebra& a, const HopfAlgebra& b, int degree) {
  CheckReport rep;
  rep.subject = a.name() + " vs " + b.name();
  Verdict vd("coproduct"), ve("counit"), vs("antipode");
  for (const auto& w : a.algebra()->basis_up_to(degree)) {
    const std::string wit = a.algebra()->format_word(w, false);
    vd.sample();
    const TensorElt da = a.coproduct_word(w), db = b.coproduct_word(w);
    if (da.terms() != db.terms()) vd.fail(wit, db.str(), da.str());
    ve.sample();
    if (a.counit_word(w) != b.counit_word(w)) ve.fail(wit, b.counit_word(w).str(), a.counit_word(w).str());
    vs.sample();
    const AlgElt sa = a.antipode_word(w), sb = b.antipode_word(w);
    if (sa.terms() != sb.terms()) vs.fail(wit, sb.str(), sa.str());
  }
  rep.add(vd);
  rep.add(ve);
  rep.add(vs);
  return rep;
}

const Builtins& builtins() {
  static const Builtins b = [] {
    Builtins r;
    r.h1cop = build_h1cop();
    r.F = build_F(r.h1cop);
    r.U = build_U();
    r.pair = std::make_shared<MatchedPair>(h1cop_matched_pair_data(r.F, r.U));
    r.B = build_bicrossed(r.pair);

    auto um = std::make_shared<ModuleCoalgebra>();
    um->name = "U";
    um->H = r.B;
    um->V = r.U->algebra();
    um->C = r.U;
    const HopfPtr B = r.B, F = r.F, U = r.U;
    um->act_word = [B, F, U](const Word& h, const Word& v) {
      const auto [fw, uw] = B->algebra()->split_word(h);
      const Rational e = F->counit_word(fw);
      if (e.is_zero()) return AlgElt::zero(U->algebra());
      return e * AlgElt(U->algebra(), U->algebra()->multiply(uw, v), true);
    };
    r.U_module = um;

    auto fm = std::make_shared<ModuleAlgebra>();
    fm->name = "F";
    fm->H = r.B;
    fm->V = r.F->algebra();
    const MatchedPairPtr mp = r.pair;
    fm->act_word = [B, F, mp](const Word& h, const Word& g) {
      const auto [fw, uw] = B->algebra()->split_word(h);
      const Rational e = F->counit_word(fw);
      if (e.is_zero()) return AlgElt::zero(F->algebra());
      return e * mp->act(uw, g);
    };
    r.F_module = fm;
    return r;
  }();
  return b;
}

// ---------------------------------------------------------------- groups

void validate_group_set(const GroupSetData& gs) {
  const int n = static_cast<int>(gs.mult.size());
  auto bad = [&](const std::string& m) { throw Error(ErrorKind::Semantic, "group " + gs.name + ": " + m); };
  if (n == 0) bad("empty multiplication table");
  for (const auto& row : gs.mult) {
    if (static_cast<int>(row.size()) != n) bad("multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= n) bad("multiplication table entry out of range");
  }
  for (int g = 0; g < n; ++g)
    if (gs.mult[0][g] != g || gs.mult[g][0] != g) bad("element 0 is not the identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (gs.mult[gs.mult[a][b]][c] != gs.mult[a][gs.mult[b][c]]) bad("multiplication is not associative");
  for (int a = 0; a < n; ++a) {
    bool inv = false;
    for (int b = 0; b < n; ++b) inv = inv || gs.mult[a][b] == 0;
    if (!inv) bad("element " + std::to_string(a) + " has no inverse");
  }
  if (!gs.elements.empty() && static_cast<int>(gs.elements.size()) != n) bad("element names do not match the table");
  const int m = static_cast<int>(gs.set.size());
  if (static_cast<int>(gs.action.size()) != n) bad("action table needs one row per group element");
  for (const auto& row : gs.action) {
    if (static_cast<int>(row.size()) != m) bad("action table row has the wrong length");
    for (int v : row)
      if (v < 0 || v >= m) bad("action table entry out of range");
  }
  for (int x = 0; x < m; ++x)
    if (gs.action[0][x] != x) bad("identity does not act trivially");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int x = 0; x < m; ++x)
        if (gs.action[gs.mult[a][b]][x] != gs.action[a][gs.action[b][x]]) bad("action is not compatible with the product");
  if (gs.normal)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int x = 0; x < m; ++x)
          if (gs.action[gs.mult[a][b]][x] != gs.action[gs.mult[b][a]][x])
            throw Error(ErrorKind::Precondition, "group " + gs.name + ": action is flagged normal but ghx != hgx");
}

GroupSetData parse_group_set(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Syntax, std::string("instance file: ") + e.what());
  }
  GroupSetData gs;
  try {
    gs.name = j.value("name", std::string("group"));
    gs.mult = j.at("mult_table").get<std::vector<std::vector<int>>>();
    gs.set = j.at("set").get<std::vector<std::string>>();
    gs.action = j.at("action_table").get<std::vector<std::vector<int>>>();
    gs.normal = j.value("normal", false);
    if (j.contains("elements")) gs.elements = j.at("elements").get<std::vector<std::string>>();
    gs.coefficients = j.value("coefficients", std::string("trivial"));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Semantic, std::string("instance file: ") + e.what());
  }
  if (gs.coefficients != "trivial" && gs.coefficients != "regular" && gs.coefficients != "conjugation")
    throw Error(ErrorKind::Semantic,
                "instance file: coefficients must be \"trivial\", \"regular\" or \"conjugation\"");
  validate_group_set(gs);
  return gs;
}

GroupSetData load_group_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IO, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_set(ss.str());
}

GroupSetData swap_instance() {
  GroupSetData gs;
  gs.name = "swap";
  gs.elements = {"e", "g"};
  gs.mult = {{0, 1}, {1, 0}};
  gs.set = {"a", "b"};
  gs.action = {{0, 1}, {1, 0}};
  gs.normal = true;
  return gs;
}

GroupSetData s3_instance() {
  GroupSetData gs;
  gs.name = "S3";
  // permutations of {0,1,2} in one-line notation; mult[a][b] = a∘b
  const std::vector<std::array<int, 3>> perms{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  gs.elements = {"e", "(01)", "(12)", "(02)", "(012)", "(021)"};
  auto find = [&](const std::array<int, 3>& p) {
    for (std::size_t k = 0; k < perms.size(); ++k)
      if (perms[k] == p) return static_cast<int>(k);
    return -1;
  };
  for (const auto& a : perms) {
    std::vector<int> row, act;
    for (const auto& b : perms) row.push_back(find({a[b[0]], a[b[1]], a[b[2]]}));
    for (int x = 0; x < 3; ++x) act.push_back(a[x]);
    gs.mult.push_back(row);
    gs.action.push_back(act);
  }
  gs.set = {"p0", "p1", "p2"};
  gs.coefficients = "conjugation";
  return gs;
}

ModuleComodulePtr group_coefficients(const GroupInstance& gi, const std::string& kind) {
  if (kind == "trivial") return trivial_coefficients(gi.G);
  if (kind == "regular") return coregular_comodule(gi.G);
  if (kind != "conjugation") usage_error("unknown coefficient kind: " + kind);
  // m h = h^-1 m h, coaction m -> m ⊗ m
  auto M = std::make_shared<ModuleComodule>();
  M->name = gi.G->name() + " (conjugation)";
  M->H = gi.G;
  M->M = gi.G->algebra();
  const HopfPtr G = gi.G;
  M->act_word = [G](const Word& m, const Word& h) { return G->antipode_word(h) * G->elt(m) * G->elt(h); };
  M->coact_word = [G](const Word& m) { return tensor(G->elt(m), G->elt(m)); };
  return M;
}

Word GroupInstance::element(int g) const { return g == 0 ? Word{} : Word{Generator("g", g)}; }

int GroupInstance::element_of(const Word& w) const {
  if (w.empty()) return 0;
  if (w.size() != 1 || w[0].name != "g") structural_error("not a group element word");
  return w[0].index;
}

Word GroupInstance::point(int x) const { return Word{Generator("x", x)}; }

int GroupInstance::point_of(const Word& w) const {
  if (w.size() != 1 || w[0].name != "x") structural_error("not a point word");
  return w[0].index;
}

int GroupInstance::inverse(int g) const {
  for (int h = 0; h < static_cast<int>(data.mult.size()); ++h)
    if (data.mult[g][h] == 0) return h;
  structural_error("element without inverse");
}

GroupInstance build_group_instance(const GroupSetData& gs) {
  validate_group_set(gs);
  GroupInstance inst;
  inst.data = gs;
  const int n = static_cast<int>(gs.mult.size());
  const int m = static_cast<int>(gs.set.size());

  std::vector<GeneratorFamily> fams;
  if (n > 1) fams.push_back(GeneratorFamily{"g", true, 1, n - 1, false, 1, "g"});
  std::vector<RewriteRule> rules;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      RewriteRule r;
      r.lhs = {letter("g", IndexExpr::constant(i)), letter("g", IndexExpr::constant(j))};
      const int k = gs.mult[i][j];
      r.rhs = {k == 0 ? pterm(1, {}) : pterm(1, {letter("g", IndexExpr::constant(k))})};
      rules.push_back(std::move(r));
    }
  std::vector<Word> basis;
  for (int g = 0; g < n; ++g) basis.push_back(inst.element(g));
  auto galg = Algebra::finite("k[" + gs.name + "]", Alphabet(fams), rules, basis, Terms{{Word{}, Rational(1)}});
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (gs.mult[g][h] == 0) inv[static_cast<std::size_t>(g)] = h;
  auto provider = [inv](const HopfAlgebra&, const Generator& g) {
    GeneratorData d;
    d.coproduct = TupleTerms{{{Word{g}, Word{g}}, Rational(1)}};
    d.counit = Rational(1);
    const int i = inv[static_cast<std::size_t>(g.index)];
    const Word w = i == 0 ? Word{} : Word{Generator("g", i)};
    d.antipode = Terms{{w, Rational(1)}};
    d.antipode_inverse = Terms{{w, Rational(1)}};
    return d;
  };
  inst.G = std::make_shared<HopfAlgebra>(galg->name(), galg, provider);

  std::vector<Word> pts;
  for (int x = 0; x < m; ++x) pts.push_back(inst.point(x));
  inst.X = Algebra::space("C_" + gs.name, Alphabet({GeneratorFamily{"x", true, 0, m - 1, false, 1, "x"}}), pts);
  inst.CX = std::make_shared<SetCoalgebra>(inst.X);

  auto cm = std::make_shared<ModuleCoalgebra>();
  cm->name = inst.X->name();
  cm->H = inst.G;
  cm->V = inst.X;
  cm->C = inst.CX;
  const auto action = gs.action;
  const AlgebraPtr X = inst.X;
  cm->act_word = [action, X](const Word& h, const Word& c) {
    const int g = h.empty() ? 0 : h[0].index;
    return AlgElt::word(X, Word{Generator("x", action[static_cast<std::size_t>(g)][static_cast<std::size_t>(c[0].index)])});
  };
  inst.CX_module = cm;

  std::vector<RewriteRule> erules;
  Terms unit;
  for (int i = 0; i < m; ++i) {
    add_term(unit, Word{Generator("e", i)}, Rational(1));
    for (int j = 0; j < m; ++j) {
      RewriteRule r;
      r.lhs = {letter("e", IndexExpr::constant(i)), letter("e", IndexExpr::constant(j))};
      if (i == j) r.rhs = {pterm(1, {letter("e", IndexExpr::constant(i))})};
      erules.push_back(std::move(r));
    }
  }
  std::vector<Word> ebasis;
  for (int x = 0; x < m; ++x) ebasis.push_back(Word{Generator("e", x)});
  auto fun = Algebra::finite("Fun(" + gs.name + ")", Alphabet({GeneratorFamily{"e", true, 0, m - 1, false, 1, "e"}}),
                             erules, ebasis, unit);
  auto am = std::make_shared<ModuleAlgebra>();
  am->name = fun->name();
  am->H = inst.G;
  am->V = fun;
  am->act_word = [action, fun](const Word& h, const Word& a) {
    const int g = h.empty() ? 0 : h[0].index;
    if (a.empty()) return AlgElt::one(fun);
    return AlgElt::word(fun, Word{Generator("e", action[static_cast<std::size_t>(g)][static_cast<std::size_t>(a[0].index)])});
  };
  inst.FunX = am;
  return inst;
}

}  // namespace hopfcyc
