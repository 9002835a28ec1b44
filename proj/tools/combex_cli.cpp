#include <iostream>
#include <string>
#include <vector>

#include "combex/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return combex::cli::run(args, std::cout, std::cerr);
}
