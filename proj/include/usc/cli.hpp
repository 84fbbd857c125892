#pragma once
// Command dispatch for the `usc` tool; exposed as a function so tests can
// drive the exact CLI surface without spawning processes.

#include <ostream>
#include <string>
#include <vector>

namespace usc {

// args excludes the program name.  Returns the process exit code:
// 0 success, 1 negative domain verdict under --strict, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace usc
