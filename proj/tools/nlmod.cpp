#include <iostream>

#include "nlmod/cli/run.hpp"

int main(int argc, char** argv) {
  return nlmod::cli::main_entry(argc, argv, std::cout, std::cerr);
}
