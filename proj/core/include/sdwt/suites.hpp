#pragma once

// Verification suites. Each check is a fixed, seeded computation with its
// tolerance pinned here; suites run their checks in declaration order.

#include <string>
#include <vector>

#include "sdwt/config.hpp"
#include "sdwt/report.hpp"

namespace sdwt {

// "parseval", "inversion", "admissibility", "fock", "kernel", "all".
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Check ids of a suite in declaration order ("all" concatenates the others).
std::vector<std::string> suite_checks(const std::string& suite);

// Every known check id, including "A14" (not part of any suite because it
// reruns suites itself).
std::vector<std::string> all_check_ids();

// Runs one check; failures of the underlying modules are recorded as a
// failing record rather than thrown. Throws InvalidArgument on unknown ids.
std::vector<CheckRecord> run_check(const std::string& id, const RunConfig& config);

VerificationReport run_suite(const std::string& suite, const RunConfig& config);

// Thread counts compared by the determinism check.
inline const std::vector<std::size_t> kDeterminismThreads{1, 4, 8};
// Suites whose reports the determinism check compares.
inline const std::vector<std::string> kDeterminismSuites{"admissibility", "fock", "kernel"};

}  // namespace sdwt
