#include <iostream>

#include "mbraid/cli.hpp"

int main(int argc, char** argv) {
  return mbraid::cli::run({argv, argv + argc}, std::cout, std::cerr);
}
