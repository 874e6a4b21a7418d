#include "hopfcyc/word.hpp"

#include <algorithm>

namespace hopfcyc {

void add_term(Terms& t, const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

void add_terms(Terms& t, const Terms& other, const Rational& scale) {
  if (scale.is_zero()) return;
  for (const auto& [w, c] : other) add_term(t, w, c * scale);
}

Word concat(const Word& a, const Word& b) {
  Word r;
  r.reserve(a.size() + b.size());
  r.insert(r.end(), a.begin(), a.end());
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Alphabet::Alphabet(std::vector<GeneratorFamily> families) : families_(std::move(families)) {
  for (auto& f : families_)
    if (f.display.empty()) f.display = f.name;
}

const GeneratorFamily* Alphabet::find(std::string_view name) const {
  for (const auto& f : families_)
    if (f.name == name) return &f;
  return nullptr;
}

int Alphabet::family_index(const Generator& g) const {
  for (std::size_t i = 0; i < families_.size(); ++i)
    if (families_[i].name == g.name) return static_cast<int>(i);
  return -1;
}

bool Alphabet::contains(const Generator& g) const {
  const auto* f = find(g.name);
  if (!f) return false;
  if (f->indexed != g.indexed()) return false;
  if (!f->indexed) return true;
  if (g.index < f->min_index) return false;
  return f->max_index < 0 || g.index <= f->max_index;
}

int Alphabet::weight(const Generator& g) const {
  const auto* f = find(g.name);
  if (!f) return 1;
  if (f->graded && g.indexed()) return g.index * f->weight;
  return f->weight;
}

int Alphabet::weight(const Word& w) const {
  int s = 0;
  for (const auto& g : w) s += weight(g);
  return s;
}

bool Alphabet::letter_less(const Generator& a, const Generator& b) const {
  const int fa = family_index(a), fb = family_index(b);
  if (fa != fb) return fa < fb;
  if (a.name != b.name) return a.name < b.name;
  return a.index < b.index;
}

bool Alphabet::order_less(const Word& a, const Word& b) const {
  const int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    return letter_less(a[i], b[i]);
  }
  return false;
}

bool Alphabet::canonical_less(const Word& a, const Word& b) const {
  const int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<Generator> Alphabet::letters_up_to(int w) const {
  std::vector<Generator> out;
  for (const auto& f : families_) {
    if (!f.indexed) {
      if (f.weight <= w) out.emplace_back(f.name);
      continue;
    }
    for (int k = f.min_index;; ++k) {
      if (f.max_index >= 0 && k > f.max_index) break;
      const int wk = f.graded ? k * f.weight : f.weight;
      if (wk > w) break;
      out.emplace_back(f.name, k);
      if (f.max_index < 0 && !f.graded && k - f.min_index > 64) break;
    }
  }
  return out;
}

std::string subscript_digits(long v) {
  static const char* sub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string s = std::to_string(v), out;
  for (char ch : s) {
    if (ch == '-') out += "₋";
    else out += sub[ch - '0'];
  }
  return out;
}

std::string superscript_digits(long v) {
  static const char* sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s = std::to_string(v), out;
  for (char ch : s) {
    if (ch == '-') out += "⁻";
    else out += sup[ch - '0'];
  }
  return out;
}

std::string Alphabet::format_letter(const Generator& g, bool pretty) const {
  if (!pretty) return g.indexed() ? g.name + "[" + std::to_string(g.index) + "]" : g.name;
  const auto* f = find(g.name);
  std::string sym = f ? f->display : g.name;
  return g.indexed() ? sym + subscript_digits(g.index) : sym;
}

std::string Alphabet::format_word(const Word& w, bool pretty) const {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long run = static_cast<long>(j - i);
    if (!pretty && !out.empty()) out += ' ';
    out += format_letter(w[i], pretty);
    if (run > 1) out += pretty ? superscript_digits(run) : "^" + std::to_string(run);
    i = j;
  }
  return out;
}

}  // namespace hopfcyc
