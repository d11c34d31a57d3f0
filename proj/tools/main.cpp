#include <iostream>

#include "permutiple/cli.hpp"

int main(int argc, char** argv) {
  return permutiple::cli::run(argc, argv, std::cout, std::cerr);
}
