#include <iostream>
#include <vector>

#include "reslat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return reslat::run_subcommand(args, std::cout, std::cerr);
}
