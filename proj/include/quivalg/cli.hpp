#ifndef QUIVALG_CLI_HPP
#define QUIVALG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace quivalg {

// Subcommand dispatch.  Exit codes: 0 success, 1 hypothesis violations,
// 2 parse or validation errors, 3 failed property check (a replayable
// counterexample file is written next to the working directory).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quivalg

#endif
