#include <iostream>

#include "chartmodal/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chartmodal::cli::run(args, std::cout, std::cerr, chartmodal::cli::Environment::from_process(argv[0]));
}
