#include <iostream>

#include "cli_driver.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return flux::cli::run_cli(args, std::cout, std::cerr);
}
