#include <iostream>
#include <string>
#include <vector>

#include "sympf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sympf::run_cli(args, std::cout, std::cerr);
}
