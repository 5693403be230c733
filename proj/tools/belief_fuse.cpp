#include <iostream>
#include <string>
#include <vector>

#include "belief/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return belief::cli::run(args, std::cout, std::cerr);
}
