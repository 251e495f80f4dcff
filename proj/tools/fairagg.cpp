#include <iostream>
#include <string>
#include <vector>

#include "fairagg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return fairagg::run_cli(args, std::cout, std::cerr);
}
