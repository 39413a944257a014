#include <iostream>
#include <string>
#include <vector>

#include "conealg/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return conealg::cli::run(args, std::cout, std::cerr);
}
