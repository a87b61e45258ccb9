#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace holoweb {

// Command-line front end, exposed as a function so tests can drive it
// without spawning processes. `args` excludes the program name.
// Exit codes: 0 success, 2 precondition violation, 3 parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace holoweb
