#include <iostream>
#include <string>
#include <vector>

#include "tqv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return tqv::cli::run(args, std::cout, std::cerr);
}
