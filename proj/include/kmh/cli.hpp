#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kmh::cli {

// Parses and executes one command line (without the program name) and writes
// results to the given streams. Exit codes: 0 success, 2 malformed command
// line or unparsable JSON, 3 domain/precondition violation, 4 identity
// verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kmh::cli
