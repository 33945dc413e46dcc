#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace alexq::cli {

enum ExitStatus : int { kOk = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

// Runs one command line (args excludes the program name). Errors are written to `err` as a
// single line starting with "error:".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alexq::cli
