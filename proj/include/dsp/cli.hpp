#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dsp {

// Runs the command-line front end on already-split arguments (program name
// excluded). Returns the process exit code: 0 affirmative/success, 1 negative
// verdict, 2 usage or input error, 3 internal error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dsp
