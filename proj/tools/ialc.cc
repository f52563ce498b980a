#include <iostream>

#include "ialc/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ialc::Run(args, std::cout, std::cerr);
}
