#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace riceie {

// Exit codes: 0 success, 1 domain/usage error, 2 numerical non-convergence,
// 3 validation failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace riceie
