#include <iostream>

#include "freqmine/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return freqmine::cli::run(argc, argv, {std::cin, std::cout, std::cerr});
}
