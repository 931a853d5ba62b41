#pragma once

#include <string>
#include <vector>

namespace toratlas {

struct CheckResult {
  std::string id;
  std::string expected;
  std::string observed;
  bool pass = false;
  double runtime_ms = 0.0;
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  bool overall = false;
};

// Runs the full battery of recorded results for the catalog graphs:
// class counts, baselines, face signatures, decorated counts, orbit
// structure, replay equivalence, genus facts, structural properties,
// and catalog integrity.
SuiteReport run_check_suite(int threads = 1);

std::string suite_to_json(const SuiteReport& r);
std::string suite_to_text(const SuiteReport& r);

}  // namespace toratlas
