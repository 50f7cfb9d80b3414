#ifndef EDGERES_CLI_HPP
#define EDGERES_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace edgeres::cli {

// Runs the command line given as argv-style tokens (without the program
// name).  Returns the process exit code: 0 success/pass, 1 computation or
// verification failure, 2 bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edgeres::cli

#endif
