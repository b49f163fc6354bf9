#include <cstdlib>
#include <iostream>

#include "diamond/cli.hpp"

int main(int argc, char const* argv[]) {
  return diamond::run_cli(argc, argv, std::cout, std::cerr,
                          std::getenv(diamond::kCapVariable));
}
