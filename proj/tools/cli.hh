#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace iop::cli {

enum ExitCode { Ok = 0, No = 1, InputError = 2, OverBudget = 3 };

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

}  // namespace iop::cli
