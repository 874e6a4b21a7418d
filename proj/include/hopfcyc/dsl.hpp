#pragma once

#include "hopfcyc/instances.hpp"
#include "hopfcyc/presentation.hpp"

#include <string>
#include <vector>

namespace hopfcyc {

/// `builtin NAME = KIND;` with KIND one of h1cop, F, U, bicrossed.
struct BuiltinRef {
  std::string name;
  std::string kind;
  bool operator==(const BuiltinRef&) const = default;
};

/// Generator tables of a matched pair; missing action entries are zero and
/// missing coaction entries are u ⊗ 1.
struct MatchedPairSpec {
  struct Act {
    LetterPattern u;
    LetterPattern f;
    std::vector<PatternTerm> value;
    bool operator==(const Act&) const = default;
  };
  struct Coact {
    LetterPattern u;
    std::vector<TensorPatternTerm> value;  // legs U, F
    bool operator==(const Coact&) const = default;
  };
  std::string name;
  std::string F;
  std::string U;
  std::vector<Act> action;
  std::vector<Coact> coaction;
  bool operator==(const MatchedPairSpec&) const = default;
};

/// `coefficients NAME over H KIND ...;` with KIND trivial, character,
/// regular (right multiplication) or coregular (coaction Δ).
struct CoefficientsSpec {
  struct Value {
    LetterPattern gen;
    CoeffExpr value;
    bool operator==(const Value&) const = default;
  };
  std::string name;
  std::string hopf;
  std::string kind;
  std::vector<Value> character;      // kind == "character"
  std::vector<PatternTerm> sigma;    // kind == "character"
  bool operator==(const CoefficientsSpec&) const = default;
};

/// `check COMMAND TARGET [degree N];`
struct CheckDirective {
  std::string command;
  std::string target;
  int degree = -1;
  bool operator==(const CheckDirective&) const = default;
};

struct PresentationFile {
  std::vector<HopfSpec> hopf;
  std::vector<BuiltinRef> builtins;
  std::vector<MatchedPairSpec> pairs;
  std::vector<CoefficientsSpec> coefficients;
  std::vector<CheckDirective> checks;

  bool empty() const;
  bool operator==(const PresentationFile& o) const;
  /// Every declared object name, in declaration order per kind.
  std::vector<std::string> hopf_names() const;
};

/// Throws ParseError (lexical, syntax or semantic) with a 1-based position.
PresentationFile parse_presentation(const std::string& text);
std::string print_presentation(const PresentationFile& f);
PresentationFile load_presentation(const std::string& path);

/// Objects named in a file, built on demand.
class Resolver {
 public:
  explicit Resolver(PresentationFile f) : file_(std::move(f)) {}

  const PresentationFile& file() const { return file_; }
  HopfPtr hopf(const std::string& name) const;
  MatchedPairPtr pair(const std::string& name) const;
  ModuleComodulePtr coefficients(const std::string& name) const;

 private:
  PresentationFile file_;
};

std::string print_hopf_spec(const HopfSpec& s);

}  // namespace hopfcyc
