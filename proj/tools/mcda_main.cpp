#include <iostream>
#include <string>
#include <vector>

#include "mcda/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mcda::cli::run(args, std::cout, std::cerr);
}
