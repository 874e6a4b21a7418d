#pragma once

#include "hopfcyc/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hopfcyc {

/// A letter: a symbol with an optional natural index (d[3] is {"d", 3}).
struct Generator {
  std::string name;
  int index = -1;

  Generator() = default;
  Generator(std::string n, int i = -1) : name(std::move(n)), index(i) {}  // NOLINT

  bool indexed() const { return index >= 0; }
  auto operator<=>(const Generator&) const = default;
  bool operator==(const Generator&) const = default;
};

using Word = std::vector<Generator>;
/// Finite linear combination of words; never stores zero coefficients.
using Terms = std::map<Word, Rational>;

void add_term(Terms& t, const Word& w, const Rational& c);
void add_terms(Terms& t, const Terms& other, const Rational& scale = Rational(1));
Word concat(const Word& a, const Word& b);

struct GeneratorFamily {
  std::string name;
  bool indexed = false;
  int min_index = 1;
  int max_index = -1;  // -1: unbounded
  bool graded = false;  // weight of name[k] is k
  int weight = 1;
  std::string display;  // symbol used by the pretty printer, defaults to name

  bool bounded() const { return !indexed || max_index >= 0; }
  bool operator==(const GeneratorFamily&) const = default;
};

/// Ordered list of generator families. The list order is the precedence used
/// by the termination order (earlier families are smaller).
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<GeneratorFamily> families);

  const std::vector<GeneratorFamily>& families() const { return families_; }
  const GeneratorFamily* find(std::string_view name) const;
  int family_index(const Generator& g) const;
  bool contains(const Generator& g) const;

  int weight(const Generator& g) const;
  int weight(const Word& w) const;

  /// Termination order: weight, then length, then lexicographic by
  /// (precedence, index).
  bool letter_less(const Generator& a, const Generator& b) const;
  bool order_less(const Word& a, const Word& b) const;
  /// Printing order: weight, then length, then lexicographic by the global
  /// (name, index) order.
  bool canonical_less(const Word& a, const Word& b) const;

  /// All letters of weight at most w (indexed unbounded families are cut at w).
  std::vector<Generator> letters_up_to(int w) const;

  std::string format_letter(const Generator& g, bool pretty) const;
  std::string format_word(const Word& w, bool pretty) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<GeneratorFamily> families_;
};

std::string subscript_digits(long v);
std::string superscript_digits(long v);

}  // namespace hopfcyc
