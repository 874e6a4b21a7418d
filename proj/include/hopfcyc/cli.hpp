#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace hopfcyc {

struct RunOptions {
  std::string file;          // presentation file
  std::string instance;      // group/set JSON, or "swap", "s3", "point"
  std::string target;        // object name (file) or built-in choice
  std::string coefficients;  // overrides the coefficient kind of an instance
  std::string side = "coalgebra";  // check-cocyclic / cohomology: coalgebra or algebra
  int degree = -1;  // -1: command default
  int upto = -1;
};

struct RunResult {
  nlohmann::ordered_json report;
  bool passed = false;
};

/// Command names accepted by run_command.
const std::vector<std::string>& command_names();

/// Dispatches one command. Throws hopfcyc::Error for usage, input and
/// precondition problems; failed checks are reported, not thrown.
RunResult run_command(const std::string& command, const RunOptions& opts);

/// One line per report and per failed verdict.
std::string summary_text(const nlohmann::ordered_json& report);

}  // namespace hopfcyc
