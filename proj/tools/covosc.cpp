#include <iostream>

#include "covosc/cli/app.hpp"

int main(int argc, char** argv) {
  return covosc::cli::main_entry(argc, argv, std::cout, std::cerr);
}
