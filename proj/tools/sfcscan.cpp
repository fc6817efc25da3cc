#include <iostream>

#include "sfcscan/cli.hpp"

int main(int argc, char** argv) {
  return sfcscan::cli::run(argc, argv, std::cout, std::cerr);
}
