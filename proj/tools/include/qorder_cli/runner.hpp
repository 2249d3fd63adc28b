#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

#include "qorder/qorder.hpp"

namespace qorder::cli {

enum class Command { Check, Enumerate, Witness, Census, VerifyPaper };

const char* to_string(Command c) noexcept;

inline constexpr int kExitOk = 0;
inline constexpr int kExitAnswerNo = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitResourceLimit = 3;

struct RunConfig {
  Command command = Command::Check;
  std::optional<std::string> input_file;
  std::optional<std::string> builtin;
  std::optional<Property> property;
  Caps caps;
  unsigned threads = 1;
  Tier tier = Tier::Checked;
  std::size_t census_max_order = 5;
  std::optional<std::string> output;
  bool fail_on_no = false;
  bool pretty = false;
};

/// Executes one command and writes a single JSON report to `out` (or to
/// config.output when set). Returns the process exit status:
///   0 success (whatever the mathematical answer),
///   1 the answer is "no" and fail_on_no is set, or a verify-paper check failed,
///   2 invalid configuration or input,
///   3 a resource cap was hit.
int run(const RunConfig& config, std::ostream& out);

}  // namespace qorder::cli
