#include <iostream>
#include <string>
#include <vector>

#include "chshlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return chshlab::run_cli(args, std::cout, std::cerr);
}
