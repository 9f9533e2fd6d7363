#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chevwidth/io.hpp"

namespace chevwidth {

struct AcceptanceOptions {
  std::uint64_t seed = 7;
  bool expensive = false;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  double seconds = 0;
  /// Up to ten failing instances, each naming the violated invariant.
  io::json failure_samples = io::json::array();
  /// Counts, histograms and notes; never includes timings.
  io::json details = io::json::object();
};

/// Runs criterion 1..8. Throws InvalidType for other ids.
CriterionResult run_criterion(int id, const AcceptanceOptions& opt);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);

/// "criterion 3: PASS symbol triviality (1234 checks, 0 failures, 0.42 s)"
std::string summary_line(const CriterionResult& r);
io::json to_json(const CriterionResult& r, bool with_timing);

}  // namespace chevwidth
