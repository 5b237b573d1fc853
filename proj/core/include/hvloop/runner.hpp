#pragma once
// Entry point of the command-line workbench, exposed as a library call so the
// test suite can drive whole invocations in-process and compare reports
// byte-for-byte.

#include <iosfwd>
#include <string>
#include <vector>

namespace hvloop {

/// Executes one CLI invocation.  `args` excludes the program name.  The JSON
/// report goes to `out`, diagnostics to `err`.  Returns the process exit
/// code: 0 when every executed check passed, 1 when any identity check failed
/// or a sign resolution was inconclusive, 2 for configuration/usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hvloop
