#include <iostream>

#include "sov/cli/cli.hpp"

int main(int argc, char** argv) { return sov::cli::run_cli(argc, argv, std::cout, std::cerr); }
