#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zsum {

// Full command-line front end, callable in-process for testing.
// Returns the process exit status: 0 ok, 1 usage/budget error, 2 when a
// verification (formula or fixture) mismatch was detected.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zsum
