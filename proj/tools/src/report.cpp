#include "multiarr_cli/report.hpp"

#include <iomanip>
#include <sstream>

namespace multiarr::cli {

void Report::check(bool ok, const std::string& what) {
  checks.push_back(std::string(ok ? "PASS " : "FAIL ") + what);
  if (!ok && exit_code == kExitOk) exit_code = kExitViolation;
}

std::string render_json(const Report& r) {
  nlohmann::json j;
  j["command"] = r.command;
  j["digest"] = r.digest;
  j["results"] = r.results;
  j["checks"] = r.checks;
  j["exit_code"] = r.exit_code;
  return j.dump(2) + "\n";
}

std::string render_human(const Report& r) {
  std::ostringstream os;
  for (const auto& line : r.text) os << line << "\n";
  for (const auto& line : r.checks) os << line << "\n";
  os << "time: " << std::fixed << std::setprecision(3) << r.seconds << " s\n";
  return os.str();
}

}  // namespace multiarr::cli
