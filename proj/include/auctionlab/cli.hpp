#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace auctionlab::cli {

enum ExitCode : int { kOk = 0, kValidationError = 1, kInternalError = 2 };

// Runs the command line `args` (args[0] is the program name). Reports go to
// `out` unless --out is given; logs and errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace auctionlab::cli
