#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grundylab::cli {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;    // a verification failed or evaluators disagree
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;  // grundylab::Error and I/O failures

struct RunOptions {
  // Selects the default output format: aligned tables on a terminal, CSV
  // (or JSON where CSV does not apply) otherwise.
  bool interactive = false;
};

// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        RunOptions options = {});

}  // namespace grundylab::cli
