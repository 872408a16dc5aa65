#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lefcert {

/// Runs one CLI invocation. args excludes the program name.
/// Exit codes: 0 success (and, for certify, realizable-consistent),
/// 2 certificate refuted, 1 invalid input or usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lefcert
