#include <iostream>

#include "xdp/cli.hpp"

int main(int argc, char** argv) {
  return xdp::cli::run_cli(argc, argv, std::cout, std::cerr);
}
