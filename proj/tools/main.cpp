#include <iostream>
#include <string>
#include <vector>

#include "sk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sk::dispatch(args, std::cin, std::cout, std::cerr);
}
