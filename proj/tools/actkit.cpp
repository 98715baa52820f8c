#include <iostream>
#include <string>
#include <vector>

#include "actkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return actkit::cli::run(args, std::cout);
}
