#include <iostream>
#include <string>
#include <vector>

#include "ratstoch/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ratstoch::cli::run(args, std::cout, std::cerr);
}
