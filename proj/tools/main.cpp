#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return maxips::dispatch(argc, argv, std::cout, std::cerr);
}
