#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dickson::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// A rendered result table. Cells are kept as text; json_kinds says how each column is
/// emitted in JSON ('s' string, 'i' integer, 'b' boolean).
struct Table {
  std::vector<std::string> columns;
  std::string json_kinds;
  std::vector<std::vector<std::string>> rows;
  /// Lines appended after CSV output (without the leading "# "). Sent to stderr for JSON.
  std::vector<std::string> trailer;
};

std::string to_csv(const Table& table);
std::string to_json(const Table& table);

/// Full command-line entry point. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dickson::cli
