#include <iostream>
#include <string>
#include <vector>

#include "gaussep/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return gaussep::cli::run(args, std::cout, std::cerr);
}
