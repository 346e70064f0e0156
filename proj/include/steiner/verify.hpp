#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace steiner {

struct VerifyOptions {
  int k_max = 0;             // 0 keeps each criterion's own cap (12/10/8)
  std::string only;          // substring filter on criterion names
  std::uint64_t seed = 20240811;
  int random_instances = 1000;
};

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the acceptance criteria, printing one PASS/FAIL line per criterion to
// `log` when given.  Returns the per-criterion results.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options, std::ostream* log);

}  // namespace steiner
