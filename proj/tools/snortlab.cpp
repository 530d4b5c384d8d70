#include <iostream>
#include <string>
#include <vector>

#include "snort/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return snort::run_cli(args, std::cout, std::cerr);
}
