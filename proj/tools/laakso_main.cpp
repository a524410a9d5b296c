// Licensed under the Apache 2.0 license. See LICENSE in the project root.
#include <iostream>

#include "laakso/cli.hpp"

int main(int argc, char** argv) {
  return laakso::cli::run(argc, argv, std::cout, std::cerr);
}
