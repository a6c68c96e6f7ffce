#include <iostream>
#include <string>
#include <vector>

#include "homform/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return homform::run(args, std::cout, std::cerr);
}
