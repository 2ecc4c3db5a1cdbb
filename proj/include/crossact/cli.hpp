#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace crossact {

enum ExitCode { kPass = 0, kVerifyFailed = 1, kMalformed = 2, kBudget = 3 };

// args excludes the program name. Reports go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crossact
