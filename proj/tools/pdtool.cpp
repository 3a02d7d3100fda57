#include <iostream>

#include "pdtool/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return pdtool::cli::run(args, std::cout, std::cerr);
}
