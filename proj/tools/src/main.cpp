// main.cpp — executable entry point for the weylkit tool.

#include <iostream>
#include <string>
#include <vector>

#include "weylkit_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return weylkit_cli::cli_main(std::move(args), std::cout, std::cerr,
                               std::cin);
}
