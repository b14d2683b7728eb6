#include "bvl/cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return bvl::cli::run(argc, argv, std::cout, std::cerr); }
