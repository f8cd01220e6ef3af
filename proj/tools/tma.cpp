/// @file
/// @brief Entry point for the `tma` executable.

#include <iostream>
#include <string>
#include <vector>

#include "tma/cli.h"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return tma::run_cli(args, std::cout, std::cerr);
}
