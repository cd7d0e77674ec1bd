#include <unistd.h>

#include <iostream>
#include <string>
#include <vector>

#include "grundylab/cli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return grundylab::cli::run(args, std::cout, std::cerr, {.interactive = isatty(STDOUT_FILENO) != 0});
}
