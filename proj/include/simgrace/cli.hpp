#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace simgrace {

// Runs one subcommand. `args` excludes the program name. Returns 0 on
// success, 2 on usage errors and 1 on runtime errors; failures write one JSON
// line {"error": kind, "message": ...} to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

const char* tool_version();

}  // namespace simgrace
