#pragma once

#include <string>
#include <vector>

#include "modlie/p_structure.hpp"

namespace modlie {

inline constexpr int kReportSchemaVersion = 1;

struct CheckResult {
  std::string id;
  std::string status;  // "pass" | "fail" | "skip"
  std::string detail;  // witness data: dims, counts, missing characters, ...
  double wall_ms = 0;
};

struct SuiteReport {
  std::string suite;
  int schema_version = kReportSchemaVersion;
  u64 seed = kDefaultSeed;
  std::vector<CheckResult> checks;
  double wall_ms = 0;

  bool ok() const;
  u32 failures() const;
};

/// The named verification suites. "all" runs every other suite in order.
std::vector<std::string> suite_names();

/// Runs one suite; deterministic for a fixed seed up to the timing fields.
/// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, u64 seed = kDefaultSeed);

std::string report_to_json(const SuiteReport& rep);

}  // namespace modlie
