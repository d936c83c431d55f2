#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vcew {

// args[0] is the program name. Returns the process exit code: 0 on success,
// 2 on unusable input, 3 when a search space exceeds its cutoff, 1 otherwise.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vcew
