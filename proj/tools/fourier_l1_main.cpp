#include <iostream>
#include <string>
#include <vector>

#include "fourier_l1/cli.hpp"

int main(int argc, char** argv) {
  return fourier_l1::cli_main(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
