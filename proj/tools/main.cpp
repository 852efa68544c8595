#include <iostream>
#include <string>
#include <vector>

#include "anyon_carnot/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return anyon::run_cli(args, std::cout, std::cerr);
}
