#include "sdwt/report.hpp"

#include <cmath>
#include <fstream>

#include "json_util.hpp"
#include "sdwt/errors.hpp"

namespace sdwt {
namespace {

using detail::json;

// NaN and infinities are not JSON numbers.
json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

}  // namespace

bool VerificationReport::pass() const {
  for (const auto& c : checks) {
    if (!c.informational && !c.pass) return false;
  }
  return true;
}

std::string VerificationReport::to_json() const {
  json list = json::array();
  for (const auto& c : checks) {
    json details = json::object();
    for (const auto& [k, v] : c.details) details[k] = number(v);
    json rec{{"id", c.id},
             {"name", c.name},
             {"anchor", c.anchor},
             {"value", number(c.value)},
             {"reference", number(c.reference)},
             {"tolerance", number(c.tolerance)},
             {"pass", c.informational ? true : c.pass},
             {"informational", c.informational},
             {"details", details}};
    if (!c.note.empty()) rec["note"] = c.note;
    list.push_back(std::move(rec));
  }
  json config = config_json.empty() ? json::object() : json::parse(config_json);
  json root{{"suite", suite}, {"seed", seed}, {"pass", pass()}, {"checks", list}, {"config", config}};
  return root.dump(2) + "\n";
}

std::string VerificationReport::timing_json() const {
  json list = json::array();
  double total = 0.0;
  for (const auto& c : checks) {
    list.push_back(json{{"id", c.id}, {"name", c.name}, {"runtime_s", c.runtime_s}});
    total += c.runtime_s;
  }
  return json{{"suite", suite}, {"total_s", total}, {"checks", list}}.dump(2) + "\n";
}

void write_report(const std::filesystem::path& dir, const VerificationReport& report) {
  std::filesystem::create_directories(dir);
  write_text(dir / "report.json", report.to_json());
  write_text(dir / "report.timing.json", report.timing_json());
}

}  // namespace sdwt
