#include <iostream>

#include "liepcd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return liepcd::run_cli(args, std::cout, std::cerr);
}
