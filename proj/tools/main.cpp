#include <iostream>
#include <string>
#include <vector>

#include "g1rank/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return g1rank::run_cli(args, std::cout, std::cerr);
}
