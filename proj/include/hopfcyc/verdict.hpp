#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hopfcyc {

/// Outcome of one named check. Only the first failure is recorded.
struct Verdict {
  std::string check;
  bool passed = true;
  std::size_t samples = 0;
  std::string witness;
  std::string expected;
  std::string computed;
  std::string difference;
  std::string difference_pretty;
  std::string note;

  explicit Verdict(std::string name = {}) : check(std::move(name)) {}

  void sample() { ++samples; }
  /// Records a failure (the first one wins). Returns true if recorded.
  bool fail(const std::string& witness_text, const std::string& expected_text = {},
            const std::string& computed_text = {}, const std::string& diff = {},
            const std::string& diff_pretty = {});
};

struct CheckReport {
  std::string subject;
  std::vector<Verdict> verdicts;

  bool passed() const;
  const Verdict* find(const std::string& check) const;
  Verdict& add(Verdict v) {
    verdicts.push_back(std::move(v));
    return verdicts.back();
  }
  void append(const CheckReport& other, const std::string& prefix = {});
};

}  // namespace hopfcyc
