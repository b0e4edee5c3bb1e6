#include <cstdlib>
#include <iostream>

#include "riesz/cli.hpp"

int main(int argc, char** argv) {
  return riesz::run_cli(argc, argv, std::cout, std::cerr, std::getenv("RIESZ_LIMITS_SEED"));
}
