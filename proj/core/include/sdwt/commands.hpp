#pragma once

// The five CLI verbs. Each writes its artifacts under config.output_dir,
// prints a one-line JSON summary to `out`, and returns the process exit code
// (0 ok, 1 check failure). Module errors propagate as sdwt::Error.

#include <iosfwd>
#include <string>

#include "sdwt/config.hpp"
#include "sdwt/errors.hpp"

namespace sdwt {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// coefficients.csv + coefficients.json.
int cmd_transform(const RunConfig& config, std::ostream& out);
// report.json + report.timing.json; 1 when any check fails.
int cmd_verify(const RunConfig& config, const std::string& suite, std::ostream& out);
// plotdata.csv with columns (axis1, axis2, abs, arg).
int cmd_plotdata(const RunConfig& config, std::ostream& out);
// kernel.csv + kernel.json: K(eta1, eta1') on the configured eta axis.
int cmd_kernel(const RunConfig& config, std::ostream& out);
// operator.csv + operator.json: U by quadrature vs normal-ordered form.
int cmd_fock(const RunConfig& config, std::ostream& out);

// Machine-readable error record.
std::string error_json(const Error& e);
std::string error_json(std::string_view code, const std::string& message);

}  // namespace sdwt
