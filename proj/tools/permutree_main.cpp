#include <iostream>

#include "permutree/cli.hpp"

int main(int argc, char** argv) {
  return permutree::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
