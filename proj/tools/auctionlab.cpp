#include <iostream>
#include <string>
#include <vector>

#include "auctionlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return auctionlab::cli::run(args, std::cout, std::cerr);
}
