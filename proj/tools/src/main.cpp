#include <iostream>

#include "genuskit_cli/cli.hpp"

int main(int argc, char** argv) {
  return genuskit::cli::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
