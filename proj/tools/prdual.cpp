#include <iostream>
#include <string>
#include <vector>

#include "prdual/cli.hpp"

int main(int argc, char** argv) {
  return prdual::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
