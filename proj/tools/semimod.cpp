#include <iostream>

#include "semimod/cli.hpp"

int main(int argc, char** argv) {
  return semimod::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
