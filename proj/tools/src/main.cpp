#include <iostream>
#include <string>
#include <vector>

#include "thermocat_cli/command.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return thermocat::cli::run(args, std::cout, std::cerr);
}
