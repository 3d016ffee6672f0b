#include <iostream>
#include <string>
#include <vector>

#include "kcore/cli.hpp"

int main(int argc, char* argv[]) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kcore::run(std::move(args), std::cout, std::cerr);
}
