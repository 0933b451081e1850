#include <iostream>
#include <string>
#include <vector>

#include "fz/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return fz::run(args, std::cout, std::cerr);
}
