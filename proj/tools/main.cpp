#include <iostream>
#include <string>
#include <vector>

#include "pogorelov/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return pogorelov::cli_run(args, std::cin, std::cout, std::cerr);
}
