#include <iostream>
#include <string>
#include <vector>

#include "ktrans/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ktrans::run(args, std::cout, std::cerr);
}
