#include <iostream>
#include <string>
#include <vector>

#include "somq/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return somq::run_cli(args, std::cout, std::cerr);
}
