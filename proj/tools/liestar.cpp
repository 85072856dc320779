#include <iostream>

#include "liestar/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return liestar::run_cli(args, std::cout, std::cerr);
}
