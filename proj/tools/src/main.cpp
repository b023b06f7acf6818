#include <iostream>

#include "pcgroups/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pcgroups::cli::run(std::move(args), std::cout, std::cerr);
}
