#include <iostream>
#include <string>
#include <vector>

#include "pascalforms/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return pascalforms::run(args, std::cout, std::cerr);
}
