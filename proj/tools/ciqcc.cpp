#include <iostream>

#include "ciqcc/cli.hpp"

int main(int argc, char** argv) {
  return ciqcc::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
