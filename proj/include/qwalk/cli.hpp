#pragma once

#include <ostream>

namespace qwalk {

/// Full command-line entry point. Returns the process exit code:
/// 0 success, 1 config error, 2 property failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qwalk
