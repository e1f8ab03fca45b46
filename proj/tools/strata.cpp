#include <iostream>
#include <string>
#include <vector>

#include "strata/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return strata::dispatch(args, std::cout, std::cerr);
}
