#include <iostream>

#include "zo_bench/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return zo::cli::run(args, std::cout, std::cerr);
}
