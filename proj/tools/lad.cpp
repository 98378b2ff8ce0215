#include <iostream>

#include "lad/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lad::cli::run(args, std::cout, std::cerr);
}
