#include <iostream>

#include "qforma/cli.hpp"

int main(int argc, char** argv) {
  return qforma::run_cli(argc, argv, std::cout, std::cerr);
}
