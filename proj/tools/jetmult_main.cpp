#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jetmult::cli::main_entry(args, std::cout, std::cerr, jetmult::cli::Environment::from_process());
}
