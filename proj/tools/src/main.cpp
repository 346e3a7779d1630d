#include <iostream>
#include <vector>

#include "maxspec/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return maxspec::cli::run(args, std::cout, std::cerr);
}
