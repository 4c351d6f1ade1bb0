#include <iostream>

#include "twp/cli/commands.hpp"

int main(int argc, char** argv) { return twp::cli::run_cli(argc, argv, std::cout, std::cerr); }
