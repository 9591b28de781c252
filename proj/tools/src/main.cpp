#include <iostream>

#include "vhc_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vhc::cli::run(args, std::cout, std::cerr);
}
