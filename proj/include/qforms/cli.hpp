#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qforms {

/// Exit codes: 0 success, 1 identity failure or counterexample, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qforms
