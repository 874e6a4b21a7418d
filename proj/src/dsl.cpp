#include "hopfcyc/dsl.hpp"

#include "hopfcyc/errors.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace hopfcyc {

namespace {

// ---------------------------------------------------------------- lexer

enum class Tok { Ident, Number, String, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int column = 1;
};

const char* const kTensor = "\xE2\x8A\x97";  // ⊗

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) advance(1);
      t.kind = Tok::Ident;
      t.text = src.substr(start, i - start);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) advance(1);
      t.kind = Tok::Number;
      t.text = src.substr(start, i - start);
    } else if (c == '"') {
      advance(1);
      while (i < src.size() && src[i] != '"' && src[i] != '\n') advance(1);
      if (i >= src.size() || src[i] != '"') throw ParseError(ErrorKind::Lexical, "unterminated string", t.line, t.column);
      t.kind = Tok::String;
      t.text = src.substr(start + 1, i - start - 1);
      advance(1);
    } else if (src.compare(i, 3, kTensor) == 0) {
      advance(3);
      t.kind = Tok::Symbol;
      t.text = "(x)";
    } else {
      static const char* const two[] = {"->", "<=", ">=", "==", "!=", "(x)"};
      bool matched = false;
      for (const char* s : two) {
        const std::size_t n = std::char_traits<char>::length(s);
        if (src.compare(i, n, s) == 0) {
          t.kind = Tok::Symbol;
          t.text = s;
          advance(n);
          matched = true;
          break;
        }
      }
      if (!matched) {
        if (std::string("{}[]();=+-/,<>").find(c) == std::string::npos)
          throw ParseError(ErrorKind::Lexical, std::string("unexpected character '") + c + "'", t.line, t.column);
        t.kind = Tok::Symbol;
        t.text = std::string(1, c);
        advance(1);
      }
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

// ---------------------------------------------------------------- parser

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  PresentationFile file() {
    PresentationFile f;
    while (peek().kind != Tok::End) {
      const Token& k = peek();
      if (is_ident("hopf")) {
        f.hopf.push_back(hopf_block());
        declare(f.hopf.back().name, k, Alphabet(f.hopf.back().families));
      } else if (is_ident("builtin")) {
        f.builtins.push_back(builtin());
      } else if (is_ident("matched_pair")) {
        f.pairs.push_back(matched_pair());
      } else if (is_ident("coefficients")) {
        f.coefficients.push_back(coefficients());
      } else if (is_ident("check")) {
        f.checks.push_back(check());
      } else {
        syntax("expected hopf, builtin, matched_pair, coefficients or check", k);
      }
    }
    return f;
  }

 private:
  [[noreturn]] void syntax(const std::string& msg, const Token& at) const {
    throw ParseError(ErrorKind::Syntax, msg + (at.kind == Tok::End ? " (at end of input)" : " near '" + at.text + "'"),
                     at.line, at.column);
  }
  [[noreturn]] void semantic(const std::string& msg, const Token& at) const {
    throw ParseError(ErrorKind::Semantic, msg, at.line, at.column);
  }

  const Token& peek(std::size_t k = 0) const { return t_[std::min(pos_ + k, t_.size() - 1)]; }
  Token next() {
    Token t = peek();
    if (pos_ < t_.size() - 1) ++pos_;
    return t;
  }
  bool is_sym(const std::string& s, std::size_t k = 0) const { return peek(k).kind == Tok::Symbol && peek(k).text == s; }
  bool is_ident(const std::string& s) const { return peek().kind == Tok::Ident && peek().text == s; }
  void expect_sym(const std::string& s) {
    if (!is_sym(s)) syntax("expected '" + s + "'", peek());
    next();
  }
  void expect_ident(const std::string& s) {
    if (!is_ident(s)) syntax("expected '" + s + "'", peek());
    next();
  }
  Token ident() {
    if (peek().kind != Tok::Ident) syntax("expected a name", peek());
    return next();
  }
  int integer() {
    bool neg = false;
    if (is_sym("-")) {
      next();
      neg = true;
    }
    if (peek().kind != Tok::Number) syntax("expected an integer", peek());
    const Token t = next();
    if (t.text.size() > 9) semantic("integer out of range", t);
    const int v = std::stoi(t.text);
    return neg ? -v : v;
  }

  void declare(const std::string& name, const Token& at, Alphabet a) {
    if (alphabets_.count(name)) semantic("duplicate object name '" + name + "'", at);
    alphabets_[name] = std::move(a);
  }
  const Alphabet& alphabet_of(const Token& name) const {
    auto it = alphabets_.find(name.text);
    if (it == alphabets_.end()) semantic("unknown object '" + name.text + "'", name);
    return it->second;
  }

  // Index variables bound in the current statement, or empty to collect.
  IndexExpr index_expr(std::set<std::string>* vars, bool binding) {
    if (peek().kind == Tok::Number) return IndexExpr::constant(integer());
    const Token v = ident();
    int off = 0;
    if (is_sym("+") || is_sym("-")) {
      const bool neg = next().text == "-";
      if (peek().kind != Tok::Number) syntax("expected an integer offset", peek());
      off = std::stoi(next().text);
      if (neg) off = -off;
    }
    if (binding) {
      vars->insert(v.text);
    } else if (vars && !vars->count(v.text)) {
      semantic("unbound index variable '" + v.text + "'", v);
    }
    return IndexExpr::variable(v.text, off);
  }

  LetterPattern letter(const Alphabet& a, std::set<std::string>* vars, bool binding) {
    const Token n = ident();
    const auto* fam = a.find(n.text);
    if (!fam) semantic("unknown generator '" + n.text + "'", n);
    LetterPattern p{n.text, IndexExpr::none()};
    if (is_sym("[")) {
      next();
      if (!fam->indexed) semantic("generator '" + n.text + "' takes no index", n);
      p.index = index_expr(vars, binding);
      expect_sym("]");
      if (p.index.kind == IndexExpr::Kind::Const &&
          (p.index.value < fam->min_index || (fam->max_index >= 0 && p.index.value > fam->max_index)))
        semantic("index out of range for '" + n.text + "'", n);
    } else if (fam->indexed) {
      semantic("generator '" + n.text + "' needs an index", n);
    }
    return p;
  }

  bool at_letter(const Alphabet& a) const { return peek().kind == Tok::Ident && a.find(peek().text) != nullptr; }

  std::vector<LetterPattern> letters(const Alphabet& a, std::set<std::string>* vars, bool binding) {
    std::vector<LetterPattern> w;
    while (at_letter(a)) w.push_back(letter(a, vars, binding));
    return w;
  }

  Rational number() {
    const Token n = next();
    Rational r = Rational::parse(n.text);
    if (is_sym("/")) {
      next();
      if (peek().kind != Tok::Number) syntax("expected a denominator", peek());
      const Token d = next();
      const Rational den = Rational::parse(d.text);
      if (den.is_zero()) semantic("zero denominator", d);
      r /= den;
    }
    return r;
  }

  /// [NUMBER[/NUMBER]] [VAR]; `found` reports whether anything was read.
  CoeffExpr coeff_prefix(const Alphabet& a, std::set<std::string>* vars, bool& found) {
    CoeffExpr c;
    found = false;
    if (peek().kind == Tok::Number) {
      c.scale = number();
      found = true;
    }
    if (peek().kind == Tok::Ident && !a.find(peek().text)) {
      const Token v = next();
      if (vars && !vars->count(v.text)) semantic("unknown generator or unbound variable '" + v.text + "'", v);
      c.var = v.text;
      found = true;
    }
    return c;
  }

  CoeffExpr coeff_value(const Alphabet& a, std::set<std::string>* vars) {
    bool neg = false;
    if (is_sym("-")) {
      next();
      neg = true;
    }
    bool found = false;
    CoeffExpr c = coeff_prefix(a, vars, found);
    if (!found) syntax("expected a coefficient", peek());
    if (neg) c.scale = -c.scale;
    return c;
  }

  std::vector<PatternTerm> sum(const Alphabet& a, std::set<std::string>* vars) {
    std::vector<PatternTerm> out;
    bool first = true;
    while (true) {
      Rational sign(1);
      if (is_sym("-")) {
        next();
        sign = Rational(-1);
      } else if (!first) {
        if (!is_sym("+")) break;
        next();
      }
      const Token at = peek();
      bool found = false;
      PatternTerm t;
      t.coeff = coeff_prefix(a, vars, found);
      t.word = letters(a, vars, false);
      if (!found && t.word.empty()) syntax("expected a term", at);
      t.coeff.scale *= sign;
      if (!t.coeff.scale.is_zero()) out.push_back(std::move(t));
      first = false;
    }
    return out;
  }

  std::vector<LetterPattern> leg(const Alphabet& a, std::set<std::string>* vars) {
    if (peek().kind == Tok::Number && peek().text == "1") {
      next();
      return {};
    }
    return letters(a, vars, false);
  }

  std::vector<TensorPatternTerm> tensor_sum(const Alphabet& left, const Alphabet& right, std::set<std::string>* vars) {
    std::vector<TensorPatternTerm> out;
    bool first = true;
    while (true) {
      Rational sign(1);
      if (is_sym("-")) {
        next();
        sign = Rational(-1);
      } else if (!first) {
        if (!is_sym("+")) break;
        next();
      }
      TensorPatternTerm t;
      bool found = false;
      // A bare leading "1" is the empty first leg; other numbers are coefficients.
      if (!(peek().kind == Tok::Number && peek().text == "1" && is_sym("(x)", 1))) t.coeff = coeff_prefix(left, vars, found);
      t.legs.push_back(leg(left, vars));
      if (!is_sym("(x)")) syntax("expected '⊗'", peek());
      while (is_sym("(x)")) {
        next();
        t.legs.push_back(leg(right, vars));
      }
      if (t.legs.size() != 2) semantic("expected a tensor with two legs", peek());
      t.coeff.scale *= sign;
      if (!t.coeff.scale.is_zero()) out.push_back(std::move(t));
      first = false;
    }
    return out;
  }

  GeneratorFamily family() {
    const Token n = ident();
    GeneratorFamily f;
    f.name = n.text;
    f.display = n.text;
    if (is_sym("[")) {
      next();
      ident();
      expect_sym("]");
      f.indexed = true;
    }
    while (!is_sym(";")) {
      const Token o = ident();
      if (o.text == "from") f.min_index = integer();
      else if (o.text == "to") f.max_index = integer();
      else if (o.text == "graded") f.graded = true;
      else if (o.text == "weight") f.weight = integer();
      else if (o.text == "display") {
        if (peek().kind != Tok::String) syntax("expected a string", peek());
        f.display = next().text;
      } else {
        syntax("unknown generator option", o);
      }
    }
    next();
    if (f.weight < 1) semantic("weight must be positive", n);
    if (f.max_index >= 0 && f.max_index < f.min_index) semantic("empty index range", n);
    return f;
  }

  Condition condition(std::set<std::string>& vars) {
    const Token v = ident();
    if (!vars.count(v.text)) semantic("unbound index variable '" + v.text + "'", v);
    Condition c;
    c.var = v.text;
    const Token op = next();
    static const std::map<std::string, Condition::Op> ops{{"<", Condition::Op::Lt},  {"<=", Condition::Op::Le},
                                                          {">", Condition::Op::Gt},  {">=", Condition::Op::Ge},
                                                          {"==", Condition::Op::Eq}, {"!=", Condition::Op::Ne}};
    auto it = ops.find(op.text);
    if (op.kind != Tok::Symbol || it == ops.end()) syntax("expected a comparison", op);
    c.op = it->second;
    c.rhs = index_expr(&vars, false);
    return c;
  }

  HopfSpec hopf_block() {
    next();
    HopfSpec s;
    const Token name = ident();
    s.name = name.text;
    expect_sym("{");
    std::set<std::string> seen;
    std::vector<Token> rule_at;
    while (!is_sym("}")) {
      const Token kw = ident();
      Alphabet a(s.families);
      std::set<std::string> vars;
      if (kw.text == "gen") {
        if (!s.rules.empty() || !s.coproduct.empty()) semantic("generators must be declared before use", kw);
        GeneratorFamily f = family();
        if (!seen.insert(f.name).second) semantic("duplicate generator '" + f.name + "'", kw);
        s.families.push_back(std::move(f));
        continue;
      }
      if (kw.text == "rule") {
        RewriteRule r;
        r.lhs = letters(a, &vars, true);
        if (peek().kind == Tok::Ident) semantic("unknown generator '" + peek().text + "'", peek());
        if (r.lhs.empty()) syntax("expected a left-hand side word", peek());
        expect_sym("->");
        r.rhs = sum(a, &vars);
        if (is_ident("when")) {
          next();
          r.conditions.push_back(condition(vars));
          while (is_sym(",")) {
            next();
            r.conditions.push_back(condition(vars));
          }
        }
        s.rules.push_back(std::move(r));
        rule_at.push_back(kw);
      } else if (kw.text == "define") {
        DefineEntry d;
        d.gen = letter(a, &vars, true);
        expect_sym("=");
        d.body = sum(a, &vars);
        s.defines.push_back(std::move(d));
      } else if (kw.text == "coproduct") {
        CoproductEntry e;
        e.gen = letter(a, &vars, true);
        expect_sym("=");
        e.value = tensor_sum(a, a, &vars);
        s.coproduct.push_back(std::move(e));
      } else if (kw.text == "counit") {
        CounitEntry e;
        e.gen = letter(a, &vars, true);
        expect_sym("=");
        e.value = coeff_value(a, &vars);
        s.counit.push_back(std::move(e));
      } else if (kw.text == "antipode" || kw.text == "antipode_inverse") {
        AntipodeEntry e;
        e.gen = letter(a, &vars, true);
        expect_sym("=");
        e.value = sum(a, &vars);
        (kw.text == "antipode" ? s.antipode : s.antipode_inverse).push_back(std::move(e));
      } else {
        syntax("unknown statement", kw);
      }
      expect_sym(";");
    }
    next();
    // Rules must decrease in the termination order.
    for (std::size_t k = 0; k < s.rules.size(); ++k) {
      RuleSet one(Alphabet(s.families), {s.rules[k]});
      const auto diag = validate_ruleset(one, 0, 4);
      if (!diag.order_violations.empty())
        throw ParseError(ErrorKind::NonTermination, "termination-order violation: " + diag.order_violations.front(),
                         rule_at[k].line, rule_at[k].column);
    }
    return s;
  }

  BuiltinRef builtin() {
    next();
    const Token n = ident();
    expect_sym("=");
    const Token k = ident();
    expect_sym(";");
    const auto& b = builtins();
    HopfPtr h;
    if (k.text == "h1cop") h = b.h1cop;
    else if (k.text == "F") h = b.F;
    else if (k.text == "U") h = b.U;
    else if (k.text == "bicrossed") h = b.B;
    else semantic("unknown builtin '" + k.text + "' (h1cop, F, U, bicrossed)", k);
    declare(n.text, n, h->algebra()->alphabet());
    return {n.text, k.text};
  }

  MatchedPairSpec matched_pair() {
    next();
    MatchedPairSpec p;
    const Token n = ident();
    p.name = n.text;
    expect_sym("{");
    expect_ident("F");
    expect_sym("=");
    const Token f = ident();
    expect_sym(";");
    expect_ident("U");
    expect_sym("=");
    const Token u = ident();
    expect_sym(";");
    const Alphabet fa = alphabet_of(f);
    const Alphabet ua = alphabet_of(u);
    p.F = f.text;
    p.U = u.text;
    while (!is_sym("}")) {
      const Token kw = ident();
      std::set<std::string> vars;
      if (kw.text == "act") {
        MatchedPairSpec::Act e;
        e.u = letter(ua, &vars, true);
        e.f = letter(fa, &vars, true);
        expect_sym("=");
        e.value = sum(fa, &vars);
        p.action.push_back(std::move(e));
      } else if (kw.text == "coact") {
        MatchedPairSpec::Coact e;
        e.u = letter(ua, &vars, true);
        expect_sym("=");
        e.value = tensor_sum(ua, fa, &vars);
        p.coaction.push_back(std::move(e));
      } else {
        syntax("expected act or coact", kw);
      }
      expect_sym(";");
    }
    next();
    std::vector<GeneratorFamily> fams = fa.families();
    for (const auto& g : ua.families()) fams.push_back(g);
    declare(p.name, n, Alphabet(fams));
    return p;
  }

  CoefficientsSpec coefficients() {
    next();
    CoefficientsSpec c;
    const Token n = ident();
    c.name = n.text;
    expect_ident("over");
    const Token h = ident();
    const Alphabet ha = alphabet_of(h);
    c.hopf = h.text;
    const Token k = ident();
    c.kind = k.text;
    if (k.text == "character") {
      expect_sym("{");
      while (!is_sym("}")) {
        std::set<std::string> vars;
        CoefficientsSpec::Value v;
        v.gen = letter(ha, &vars, true);
        expect_sym("=");
        v.value = coeff_value(ha, &vars);
        expect_sym(";");
        c.character.push_back(std::move(v));
      }
      next();
      expect_ident("sigma");
      std::set<std::string> none;
      c.sigma = sum(ha, &none);
      if (c.sigma.empty()) semantic("sigma must be nonzero", k);
    } else if (k.text != "trivial" && k.text != "regular" && k.text != "coregular") {
      semantic("unknown coefficient kind '" + k.text + "' (trivial, character, regular, coregular)", k);
    }
    expect_sym(";");
    if (alphabets_.count(c.name)) semantic("duplicate object name '" + c.name + "'", n);
    coefficient_names_.insert(c.name);
    return c;
  }

  CheckDirective check() {
    next();
    CheckDirective d;
    d.command = ident().text;
    while (is_sym("-")) {
      next();
      d.command += "-" + ident().text;
    }
    const Token target = ident();
    if (!alphabets_.count(target.text) && !coefficient_names_.count(target.text))
      semantic("unknown object '" + target.text + "'", target);
    d.target = target.text;
    if (is_ident("degree")) {
      next();
      d.degree = integer();
      if (d.degree < 0) semantic("negative degree", target);
    }
    expect_sym(";");
    return d;
  }

  std::vector<Token> t_;
  std::size_t pos_ = 0;
  std::map<std::string, Alphabet> alphabets_;
  std::set<std::string> coefficient_names_;
};

// ---------------------------------------------------------------- printer

std::string index_text(const IndexExpr& e) {
  switch (e.kind) {
    case IndexExpr::Kind::None: return {};
    case IndexExpr::Kind::Const: return std::to_string(e.value);
    case IndexExpr::Kind::Var:
      if (e.value == 0) return e.var;
      return e.var + (e.value > 0 ? "+" : "-") + std::to_string(e.value > 0 ? e.value : -e.value);
  }
  return {};
}

std::string letter_text(const LetterPattern& p) {
  return p.index.kind == IndexExpr::Kind::None ? p.name : p.name + "[" + index_text(p.index) + "]";
}

std::string word_text(const std::vector<LetterPattern>& w) {
  std::string s;
  for (const auto& l : w) s += (s.empty() ? "" : " ") + letter_text(l);
  return s;
}

std::string leg_text(const std::vector<LetterPattern>& w) { return w.empty() ? "1" : word_text(w); }

/// Magnitude part of a term: coefficient (when needed), variable, word.
std::string term_body(const CoeffExpr& c, const std::string& word, bool word_empty) {
  std::vector<std::string> parts;
  const Rational a = c.scale.abs();
  if (!a.is_one() || (c.var.empty() && word_empty)) parts.push_back(a.str());
  if (!c.var.empty()) parts.push_back(c.var);
  if (!word_empty) parts.push_back(word);
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : " ") + p;
  return s;
}

template <class T, class F>
std::string signed_sum(const std::vector<T>& terms, F body) {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& t : terms) {
    const bool neg = t.coeff.scale.sign() < 0;
    if (s.empty()) s = neg ? "-" : "";
    else s += neg ? " - " : " + ";
    s += body(t);
  }
  return s;
}

std::string sum_text(const std::vector<PatternTerm>& terms) {
  return signed_sum(terms, [](const PatternTerm& t) { return term_body(t.coeff, word_text(t.word), t.word.empty()); });
}

std::string tensor_text(const std::vector<TensorPatternTerm>& terms) {
  return signed_sum(terms, [](const TensorPatternTerm& t) {
    std::string legs;
    for (const auto& l : t.legs) legs += (legs.empty() ? "" : " ⊗ ") + leg_text(l);
    const Rational a = t.coeff.scale.abs();
    std::string pre;
    if (!a.is_one()) pre = a.str();
    if (!t.coeff.var.empty()) pre += (pre.empty() ? "" : " ") + t.coeff.var;
    return pre.empty() ? legs : pre + " " + legs;
  });
}

std::string coeff_text(const CoeffExpr& c) {
  if (c.var.empty()) return c.scale.str();
  if (c.scale.is_one()) return c.var;
  if (c.scale == Rational(-1)) return "-" + c.var;
  return c.scale.str() + " " + c.var;
}

std::string op_symbol(Condition::Op op) {
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

std::string family_text(const GeneratorFamily& f) {
  std::string s = "gen " + f.name;
  if (f.indexed) s += "[k]";
  if (f.indexed || f.min_index != 1) s += " from " + std::to_string(f.min_index);
  if (f.max_index >= 0) s += " to " + std::to_string(f.max_index);
  if (f.graded) s += " graded";
  if (f.weight != 1) s += " weight " + std::to_string(f.weight);
  if (f.display != f.name) s += " display \"" + f.display + "\"";
  return s + ";";
}

}  // namespace

bool PresentationFile::empty() const {
  return hopf.empty() && builtins.empty() && pairs.empty() && coefficients.empty() && checks.empty();
}

bool PresentationFile::operator==(const PresentationFile& o) const {
  return hopf == o.hopf && builtins == o.builtins && pairs == o.pairs && coefficients == o.coefficients &&
         checks == o.checks;
}

std::vector<std::string> PresentationFile::hopf_names() const {
  std::vector<std::string> out;
  for (const auto& b : builtins) out.push_back(b.name);
  for (const auto& h : hopf) out.push_back(h.name);
  for (const auto& p : pairs) out.push_back(p.name);
  return out;
}

PresentationFile parse_presentation(const std::string& text) { return Parser(lex(text)).file(); }

std::string print_hopf_spec(const HopfSpec& s) {
  std::ostringstream os;
  os << "hopf " << s.name << " {\n";
  for (const auto& f : s.families) os << "  " << family_text(f) << "\n";
  for (const auto& r : s.rules) {
    os << "  rule " << word_text(r.lhs) << " -> " << sum_text(r.rhs);
    for (std::size_t k = 0; k < r.conditions.size(); ++k) {
      const auto& c = r.conditions[k];
      os << (k ? ", " : " when ") << c.var << " " << op_symbol(c.op) << " " << index_text(c.rhs);
    }
    os << ";\n";
  }
  for (const auto& d : s.defines) os << "  define " << letter_text(d.gen) << " = " << sum_text(d.body) << ";\n";
  for (const auto& e : s.coproduct) os << "  coproduct " << letter_text(e.gen) << " = " << tensor_text(e.value) << ";\n";
  for (const auto& e : s.counit) os << "  counit " << letter_text(e.gen) << " = " << coeff_text(e.value) << ";\n";
  for (const auto& e : s.antipode) os << "  antipode " << letter_text(e.gen) << " = " << sum_text(e.value) << ";\n";
  for (const auto& e : s.antipode_inverse)
    os << "  antipode_inverse " << letter_text(e.gen) << " = " << sum_text(e.value) << ";\n";
  os << "}\n";
  return os.str();
}

std::string print_presentation(const PresentationFile& f) {
  std::ostringstream os;
  bool gap = false;
  auto sep = [&] {
    if (gap) os << "\n";
    gap = true;
  };
  if (!f.builtins.empty()) {
    sep();
    for (const auto& b : f.builtins) os << "builtin " << b.name << " = " << b.kind << ";\n";
  }
  for (const auto& h : f.hopf) {
    sep();
    os << print_hopf_spec(h);
  }
  for (const auto& p : f.pairs) {
    sep();
    os << "matched_pair " << p.name << " {\n  F = " << p.F << ";\n  U = " << p.U << ";\n";
    for (const auto& a : p.action)
      os << "  act " << letter_text(a.u) << " " << letter_text(a.f) << " = " << sum_text(a.value) << ";\n";
    for (const auto& c : p.coaction) os << "  coact " << letter_text(c.u) << " = " << tensor_text(c.value) << ";\n";
    os << "}\n";
  }
  if (!f.coefficients.empty()) {
    sep();
    for (const auto& c : f.coefficients) {
      os << "coefficients " << c.name << " over " << c.hopf << " " << c.kind;
      if (c.kind == "character") {
        os << " {";
        for (const auto& v : c.character) os << " " << letter_text(v.gen) << " = " << coeff_text(v.value) << ";";
        os << " } sigma " << sum_text(c.sigma);
      }
      os << ";\n";
    }
  }
  if (!f.checks.empty()) {
    sep();
    for (const auto& c : f.checks) {
      os << "check " << c.command << " " << c.target;
      if (c.degree >= 0) os << " degree " << c.degree;
      os << ";\n";
    }
  }
  return os.str();
}

PresentationFile load_presentation(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) io_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_presentation(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), path + ":" + e.what(), e.line(), e.column());
  }
}

// ---------------------------------------------------------------- resolution

HopfPtr Resolver::hopf(const std::string& name) const {
  for (const auto& b : file_.builtins)
    if (b.name == name) {
      const auto& bs = builtins();
      if (b.kind == "h1cop") return bs.h1cop;
      if (b.kind == "F") return bs.F;
      if (b.kind == "U") return bs.U;
      return bs.B;
    }
  for (const auto& h : file_.hopf)
    if (h.name == name) return build_hopf(h);
  for (const auto& p : file_.pairs)
    if (p.name == name) return build_bicrossed(pair(name));
  semantic_error("unknown Hopf algebra '" + name + "'");
}

MatchedPairPtr Resolver::pair(const std::string& name) const {
  for (const auto& p : file_.pairs) {
    if (p.name != name) continue;
    MatchedPairData d;
    d.name = p.name;
    d.F = hopf(p.F);
    d.U = hopf(p.U);
    const Alphabet fa = d.F->algebra()->alphabet();
    const Alphabet ua = d.U->algebra()->alphabet();
    d.action = [p, fa, ua](const Generator& u, const Generator& f) {
      for (const auto& e : p.action) {
        Bindings bu, bf;
        if (!match_letter(e.u, u, ua, bu) || !match_letter(e.f, f, fa, bf)) continue;
        bool consistent = true;
        for (const auto& [k, v] : bf) {
          auto it = bu.find(k);
          if (it != bu.end() && it->second != v) consistent = false;
          bu[k] = v;
        }
        if (consistent) return instantiate(e.value, bu);
      }
      return Terms{};
    };
    d.coaction = [p, ua](const Generator& u) {
      for (const auto& e : p.coaction) {
        Bindings b;
        if (match_letter(e.u, u, ua, b)) return instantiate_tensor(e.value, b);
      }
      TupleTerms t;
      t[{Word{u}, Word{}}] = Rational(1);
      return t;
    };
    return std::make_shared<MatchedPair>(std::move(d));
  }
  semantic_error("unknown matched pair '" + name + "'");
}

ModuleComodulePtr Resolver::coefficients(const std::string& name) const {
  for (const auto& c : file_.coefficients) {
    if (c.name != name) continue;
    const HopfPtr H = hopf(c.hopf);
    if (c.kind == "trivial") return trivial_coefficients(H);
    if (c.kind == "regular") return regular_right_module(H);
    if (c.kind == "coregular") return coregular_comodule(H);
    const Alphabet a = H->algebra()->alphabet();
    Character delta;
    delta.name = "δ";
    delta.on_generator = [values = c.character, a](const Generator& g) {
      for (const auto& v : values) {
        Bindings b;
        if (match_letter(v.gen, g, a, b)) return v.value.eval(b);
      }
      semantic_error("character has no value on " + a.format_letter(g, false));
    };
    const AlgElt sigma(H->algebra(), instantiate(c.sigma, {}));
    return character_coefficients(H, delta, sigma, c.name);
  }
  semantic_error("unknown coefficients '" + name + "'");
}

}  // namespace hopfcyc
