#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homform {

/// Exit codes of the command line front end.
enum ExitCode : int { kOk = 0, kInternal = 1, kValidation = 2, kGuard = 3, kPrecondition = 4 };

/// Runs the homform command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homform
