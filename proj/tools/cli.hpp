#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gea::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,     // bad flags or unparseable input
  kDomain = 2,    // precondition violation
  kInternal = 3,  // internal consistency failure
};

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gea::cli
