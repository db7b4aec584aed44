#include <iostream>
#include <vector>

#include "lacm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lacm::run_cli(args, std::cout, std::cerr);
}
