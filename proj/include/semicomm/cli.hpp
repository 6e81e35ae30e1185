#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semicomm {

/// Runs the semicomm command line on the given arguments (without argv[0]).
/// Exit codes: 0 success, 1 predicate violated / verification failed,
/// 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semicomm
