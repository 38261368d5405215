#include <iostream>

#include "geomult/cli.hpp"

int main(int argc, char** argv) {
  return geomult::run_cli(argc, argv, std::cout, std::cerr);
}
