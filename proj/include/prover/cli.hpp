#pragma once

// Command-line entry point. Exit codes: 0 success, 1 usage error,
// 2 data/config error.

#include <iosfwd>
#include <string>
#include <vector>

namespace prover {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace prover
