#pragma once

#include "hopfcyc/hopf.hpp"
#include "hopfcyc/rewrite.hpp"

#include <string>
#include <vector>

namespace hopfcyc {

/// c * (w_1 ⊗ ... ⊗ w_n) with index-schema letters.
struct TensorPatternTerm {
  CoeffExpr coeff;
  std::vector<std::vector<LetterPattern>> legs;
  bool operator==(const TensorPatternTerm&) const = default;
};

struct CoproductEntry {
  LetterPattern gen;
  std::vector<TensorPatternTerm> value;
  bool operator==(const CoproductEntry&) const = default;
};

struct CounitEntry {
  LetterPattern gen;
  CoeffExpr value;
  bool operator==(const CounitEntry&) const = default;
};

struct AntipodeEntry {
  LetterPattern gen;
  std::vector<PatternTerm> value;
  bool operator==(const AntipodeEntry&) const = default;
};

/// A generator expressed through other letters, e.g. d[k+1] = X d[k] - d[k] X.
/// Structure maps of the generator are derived from the body.
struct DefineEntry {
  LetterPattern gen;
  std::vector<PatternTerm> body;
  bool operator==(const DefineEntry&) const = default;
};

/// Declarative description of a presented Hopf algebra.
struct HopfSpec {
  std::string name;
  std::vector<GeneratorFamily> families;
  std::vector<RewriteRule> rules;
  std::vector<CoproductEntry> coproduct;
  std::vector<CounitEntry> counit;
  std::vector<AntipodeEntry> antipode;
  std::vector<AntipodeEntry> antipode_inverse;
  std::vector<DefineEntry> defines;

  bool operator==(const HopfSpec& o) const;
};

/// Binds the pattern against a concrete letter; false if it does not match.
bool match_letter(const LetterPattern& p, const Generator& g, const Alphabet& alphabet, Bindings& b);

TupleTerms instantiate_tensor(const std::vector<TensorPatternTerm>& terms, const Bindings& b);

HopfPtr build_hopf(const HopfSpec& spec);

/// The presentation of the Connes-Moscovici Hopf algebra H1 with the
/// co-opposite coproduct.
HopfSpec h1cop_spec();

}  // namespace hopfcyc
