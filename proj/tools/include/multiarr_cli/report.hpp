#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace multiarr::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitViolation = 2, kExitInput = 3 };

/// Outcome of one subcommand. JSON rendering is deterministic: it omits the
/// timing, which only appears in the human rendering.
struct Report {
  std::string command;                 // echo of the invocation, e.g. "exp a2.json"
  std::string digest;                  // SHA-256 of the canonical input, empty if none
  nlohmann::json results = nlohmann::json::object();
  std::vector<std::string> checks;     // "PASS ..." / "FAIL ..." lines
  std::vector<std::string> text;       // human-readable body
  double seconds = 0.0;
  int exit_code = kExitOk;

  void check(bool ok, const std::string& what);
};

std::string render_json(const Report& r);
std::string render_human(const Report& r);

}  // namespace multiarr::cli
