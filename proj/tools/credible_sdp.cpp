#include <iostream>

#include "csdp/cli.hpp"

int main(int argc, char** argv) {
  return csdp::cli::run(argc, argv, std::cout, std::cerr);
}
