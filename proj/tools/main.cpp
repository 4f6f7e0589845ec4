#include <iostream>
#include <string>
#include <vector>

#include "protomc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return protomc::run(args, std::cin, std::cout, std::cerr);
}
