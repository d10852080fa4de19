#include <iostream>

#include "terngrid/cli.hpp"

int main(int argc, char** argv) { return terngrid::run_cli(argc, argv, std::cout, std::cerr); }
