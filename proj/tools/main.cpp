#include <iostream>

#include "dicol/cli.hpp"

int main(int argc, char** argv) {
  return dicol::cli::run(argc, argv, std::cout, std::cerr);
}
