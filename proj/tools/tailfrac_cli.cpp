#include <iostream>
#include <string>
#include <vector>

#include "tailfrac/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return tailfrac::cli::main_entry(args, std::cout, std::cerr);
}
