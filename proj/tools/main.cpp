#include <iostream>

#include "s3s4/cli.hpp"

int main(int argc, char** argv) {
  return s3s4::run_cli(argc, argv, std::cout, std::cerr);
}
