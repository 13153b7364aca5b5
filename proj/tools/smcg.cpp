#include <iostream>
#include <string>
#include <vector>

#include "smcg/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return smcg::cli::run(args, std::cout, std::cerr);
}
