#include <iostream>
#include <string>
#include <vector>

#include "gelfand/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gelfand::run_cli(args, std::cout, std::cerr);
}
