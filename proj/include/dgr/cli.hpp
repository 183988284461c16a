#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dgr::cli {

enum ExitCode : int { ok = 0, usage_error = 1, input_error = 2, violation_found = 3 };

// Runs one invocation. args excludes the program name. Standard input is
// read for `compute --input -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace dgr::cli
