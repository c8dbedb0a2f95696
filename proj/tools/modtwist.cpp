#include <iostream>

#include "modtwist/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return modtwist::cli::run(args, std::cout, std::cerr);
}
