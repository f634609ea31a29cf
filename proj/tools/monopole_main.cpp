#include <iostream>
#include <string>
#include <vector>

#include "monopole/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return monopole::cli::run(args, std::cout, std::cerr);
}
