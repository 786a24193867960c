#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace prdual::cli {

/// Exit codes: 0 positive verdict or success, 1 negative verdict, 2 usage or
/// input error.
enum ExitCode : int { kSuccess = 0, kNegative = 1, kUsage = 2 };

/// One subcommand's outcome: the JSON document (always carries "kind" and the
/// inputs needed to replay it), the human-readable text, and the exit code.
struct Report {
  nlohmann::json doc;
  std::string text;
  int code = kSuccess;
};

/// Recomputes a report from the inputs recorded in `doc`.
Report replay(const nlohmann::json& doc);

/// Entry point shared by the executable and the tests. args[0] is the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prdual::cli
