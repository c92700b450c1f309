#pragma once

// Verification reports. The JSON report is a pure function of config and
// seed; wall-clock runtimes go to a separate timing file so reports stay
// byte-identical across runs and thread counts.

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace sdwt {

struct CheckRecord {
  std::string id;      // criterion id ("A3") or check name for extra checks
  std::string name;
  std::string anchor;  // which identity of the transform theory is exercised
  double value = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  // Reported only; always counted as passing.
  bool informational = false;
  std::vector<std::pair<std::string, double>> details;
  std::string note;
  double runtime_s = 0.0;  // timing sidecar only
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::string config_json;  // canonical RunConfig text
  std::vector<CheckRecord> checks;

  bool pass() const;
  std::string to_json() const;
  std::string timing_json() const;
};

// Writes <dir>/report.json and <dir>/report.timing.json.
void write_report(const std::filesystem::path& dir, const VerificationReport& report);

}  // namespace sdwt
