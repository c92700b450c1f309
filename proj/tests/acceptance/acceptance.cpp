// Acceptance runner: one PASS/FAIL line per criterion A1..A14.
//
//   sdwt_acceptance                 all criteria
//   sdwt_acceptance --criterion A7  one criterion
//
// Tolerances live with the checks in the core library; this binary only
// groups records by criterion id.

#include <CLI11.hpp>
#include <cstdio>
#include <string>
#include <vector>

#include "sdwt/config.hpp"
#include "sdwt/field_io.hpp"
#include "sdwt/suites.hpp"

namespace {

const std::vector<std::string> kCriteria{"A1", "A2", "A3", "A4", "A5", "A6", "A7",
                                         "A8", "A9", "A10", "A11", "A12", "A13", "A14"};

bool run_one(const std::string& id, const sdwt::RunConfig& config) {
  const auto recs = sdwt::run_check(id, config);
  bool ok = true;
  double runtime = 0.0;
  for (const auto& r : recs) {
    if (!r.informational) ok = ok && r.pass;
    runtime += r.runtime_s;
  }
  std::printf("%-4s %s  (%.1fs)\n", id.c_str(), ok ? "PASS" : "FAIL", runtime);
  for (const auto& r : recs) {
    std::printf("     %-44s value=%s tol=%s%s%s\n", r.name.c_str(), sdwt::format_double(r.value).c_str(),
                sdwt::format_double(r.tolerance).c_str(), r.informational ? " [reported only]" : "",
                r.note.empty() ? "" : ("  # " + r.note).c_str());
    for (const auto& [k, v] : r.details) std::printf("       %s = %s\n", k.c_str(), sdwt::format_double(v).c_str());
  }
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<std::string> only;
  std::vector<std::string> sets;
  app.add_option("--criterion", only, "criterion id (repeatable)")->check(CLI::IsMember(kCriteria));
  app.add_option("--set", sets, "config override key=value");
  CLI11_PARSE(app, argc, argv);

  const sdwt::RunConfig config = sdwt::parse_config("", sets);
  const std::vector<std::string>& ids = only.empty() ? kCriteria : only;
  bool all = true;
  for (const auto& id : ids) all = run_one(id, config) && all;
  return all ? 0 : 1;
}
