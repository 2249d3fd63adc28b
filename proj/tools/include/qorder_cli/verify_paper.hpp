#pragma once

#include <string>
#include <vector>

#include "qorder_cli/io.hpp"

namespace qorder::cli {

struct NamedCheck {
  std::string name;
  std::string statement;
  bool passed = false;
  Json detail;
  double seconds = 0.0;
};

/// Runs every finite claim as an executable check. Failures are reported,
/// never thrown.
std::vector<NamedCheck> verify_paper(const SearchOptions& opts = {});

Json to_json(const NamedCheck& check);

}  // namespace qorder::cli
