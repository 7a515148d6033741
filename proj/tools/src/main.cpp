#include <iostream>

#include "cuweno/cli.hpp"

int main(int argc, char** argv) {
  return cuweno::cli::parse_and_dispatch(argc, argv, std::cout, std::cerr);
}
