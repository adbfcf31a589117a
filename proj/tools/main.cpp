#include <iostream>
#include <string>
#include <vector>

#include "pgl2q/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pgl2q::cli_main(args, std::cout, std::cerr);
}
