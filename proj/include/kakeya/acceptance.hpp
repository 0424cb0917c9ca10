#pragma once

// The check-all verification suite: twelve numbered checks, each printing one
// PASS/FAIL line. Reports contain no wall-clock data, so identical
// configuration yields byte-identical output; durations go to a separate
// diagnostic stream when requested.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace kakeya {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::vector<std::string> details;  // deterministic lines
  double wall_ms = 0.0;              // never rendered into reports
};

// level: "desk" = all twelve, "quick" = the fast subset {1,2,5,7,10}.
std::vector<int> acceptance_level(const std::string& level);

CriterionResult run_criterion(int id, uint64_t seed);

struct AcceptanceRun {
  std::vector<CriterionResult> results;
  bool all_pass = false;
  std::string report;  // deterministic text report
};

AcceptanceRun run_acceptance(const std::string& level, uint64_t seed);

}  // namespace kakeya
