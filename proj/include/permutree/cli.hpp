#ifndef PERMUTREE_CLI_HPP
#define PERMUTREE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace permutree {

/// Exit codes: 0 success, 1 a mathematical failure (unsortable, non-minimal,
/// counterexample found), 2 a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace permutree

#endif
