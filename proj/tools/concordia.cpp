#include <iostream>

#include "concordia/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return concordia::run_cli(args, std::cout, std::cerr, std::cin);
}
