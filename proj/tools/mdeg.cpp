#include <iostream>

#include "mdeg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return mdeg::run(args, std::cout, std::cerr);
}
