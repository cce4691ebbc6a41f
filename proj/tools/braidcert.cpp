#include <iostream>
#include <string>
#include <vector>

#include "braidcert/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return braidcert::cli::run(args, std::cout, std::cerr);
}
