#ifndef RESLAT_CLI_HPP
#define RESLAT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace reslat {

/// Dispatches one CLI invocation. Exit codes: 0 all checks passed,
/// 1 at least one check failed, 2 parse or usage error.
int run_subcommand(const std::vector<std::string>& argv, std::ostream& out,
                   std::ostream& err);

}  // namespace reslat

#endif
