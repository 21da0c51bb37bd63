#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hm {

/// Runs the command-line tool. Exit codes: 0 success, 1 verification
/// failed, 2 usage or malformed input, 3 resource budget exceeded.
/// Resource budgets come from HM_MAX_COSETS and HM_MAX_BAR_DEGREE.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hm
