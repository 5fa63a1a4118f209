#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mdeg {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitParse = 2,      // malformed expression, bad arguments, unreadable file
  kExitNoWitness = 3,  // a factor has a finite degree class
};

/// Runs the tool; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mdeg
