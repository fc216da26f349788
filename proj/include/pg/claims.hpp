#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace pg {

/// Outcome of one reproducible check about the two pg(5,5,2) geometries.
struct ClaimResult {
  std::string id;    // "C1".."C11"
  std::string title;
  /// "pass", "fail", or "inconclusive" (a bounded search ran out without a
  /// witness; that is a search-space limit, not a refutation).
  std::string status;
  nlohmann::json details;

  bool passed() const { return status == "pass"; }
};

struct ClaimCheck {
  std::string id;
  std::string title;
  std::function<ClaimResult()> run;
};

/// Every claim in a fixed order.
std::vector<ClaimCheck> all_claims();
std::vector<ClaimResult> run_all_claims();

/// One line per claim: "C1   pass  title".
std::string summary_table(const std::vector<ClaimResult> &results);

} // namespace pg
