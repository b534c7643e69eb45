#include <iostream>

#include "selmer/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return selmer::run_cli(args, std::cout, std::cerr);
}
