#include <iostream>

#include "weightcat/cli.hpp"

int main(int argc, char** argv) {
  return weightcat::run_cli(argc, argv, std::cout, std::cerr);
}
