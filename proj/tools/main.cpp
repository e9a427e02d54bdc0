#include <iostream>

#include "iterasym/cli.hpp"

int main(int argc, char** argv) {
  return iterasym::runCli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
