#include <iostream>

#include "zzl/cli.hpp"

int main(int argc, char** argv) {
  return zzl::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
