#include <iostream>
#include <string>
#include <vector>

#include "coref/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return coref::cli::run(args, std::cout, std::cerr);
}
