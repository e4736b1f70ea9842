#include <iostream>
#include <string>
#include <vector>

#include "sigbasis/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sigbasis::runCli(args, std::cout, std::cerr);
}
