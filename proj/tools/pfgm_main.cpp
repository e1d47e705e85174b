#include <iostream>
#include <string>
#include <vector>

#include "pfgm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pfgm::cli::run(args, std::cout, std::cerr, pfgm::cli::Environment::from_process());
}
