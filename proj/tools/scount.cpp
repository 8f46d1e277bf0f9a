#include <iostream>

#include "scount/cli.hpp"

int main(int argc, char **argv) {
  return scount::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
