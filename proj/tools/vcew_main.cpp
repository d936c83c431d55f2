#include <iostream>

#include "vcew/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return vcew::run_cli(args, std::cout, std::cerr);
}
