#include <iostream>

#include "closedfactors_cli/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return closedfactors::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
