#include <iostream>
#include <string>
#include <vector>

#include "forcinglab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return forcinglab::run_cli(args, std::cout, std::cerr);
}
