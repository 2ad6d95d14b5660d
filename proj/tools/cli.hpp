#pragma once

#include <ostream>

namespace twinlcs {

/// Entry point of the command-line tool. Exit codes: 0 success, 1 failed
/// verification, 2 usage or input error, 3 resource limit.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace twinlcs
