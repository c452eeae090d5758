#include <iostream>

#include "mafre_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mafre::cli::run(args, std::cout, std::cerr);
}
