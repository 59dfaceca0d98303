#include <iostream>
#include <string>
#include <vector>

#include "enriched/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return enriched::run(args, std::cout, std::cerr);
}
