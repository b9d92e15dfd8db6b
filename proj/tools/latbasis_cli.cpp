#include <iostream>
#include <string>
#include <vector>

#include "latbasis_commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return latbasis::cli::run(std::move(args), std::cin, std::cout, std::cerr);
}
