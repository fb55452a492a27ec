#include <iostream>
#include <string>
#include <vector>

#include "aeg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return aeg::run_command(args, std::cout, std::cerr);
}
