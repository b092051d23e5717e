#ifndef GAUSSEP_COMMANDS_HPP
#define GAUSSEP_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gaussep::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,           // physical / not detected
  kUsageError = 1,   // bad arguments, unreadable or malformed input
  kNonphysical = 2,  // input violates the uncertainty relation
  kDetected = 3,     // entanglement detected
};

/// Runs one command line (args[0] is the program name) and returns the exit
/// code. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gaussep::cli

#endif  // GAUSSEP_COMMANDS_HPP
