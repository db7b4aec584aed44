#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lacm {

/* Runs the command-line interface on the given arguments (excluding the
 * program name), writing results to `out` and diagnostics to `err`.
 * Exit contract: 0 success, 1 verification-check failure, 2 usage error. */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lacm
