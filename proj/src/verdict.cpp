#include "hopfcyc/verdict.hpp"

namespace hopfcyc {

bool Verdict::fail(const std::string& witness_text, const std::string& expected_text,
                   const std::string& computed_text, const std::string& diff, const std::string& diff_pretty) {
  if (!passed) return false;
  passed = false;
  witness = witness_text;
  expected = expected_text;
  computed = computed_text;
  difference = diff;
  difference_pretty = diff_pretty;
  return true;
}

bool CheckReport::passed() const {
  for (const auto& v : verdicts)
    if (!v.passed) return false;
  return true;
}

const Verdict* CheckReport::find(const std::string& check) const {
  for (const auto& v : verdicts)
    if (v.check == check) return &v;
  return nullptr;
}

void CheckReport::append(const CheckReport& other, const std::string& prefix) {
  for (auto v : other.verdicts) {
    if (!prefix.empty()) v.check = prefix + v.check;
    verdicts.push_back(std::move(v));
  }
}

}  // namespace hopfcyc
