#include <iostream>

#include "primspec/cli.hpp"

int main(int argc, char** argv) {
  return primspec::cli::run(std::vector<std::string>(argv, argv + argc), std::cout);
}
