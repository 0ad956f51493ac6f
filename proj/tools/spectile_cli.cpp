#include <iostream>

#include "spectile/cli.hpp"

int main(int argc, char** argv) { return spectile::run_cli(argc, argv, std::cout, std::cerr); }
