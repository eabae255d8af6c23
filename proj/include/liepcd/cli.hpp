#ifndef LIEPCD_CLI_HPP
#define LIEPCD_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "liepcd/io.hpp"

namespace liepcd {

/// Dispatches one CLI invocation; returns the process exit status
/// (0 ok, 1 analysis failure, 2 malformed input).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liepcd

#endif
