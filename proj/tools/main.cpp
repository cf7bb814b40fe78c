#include "ubtr/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return ubtr::cli::run_cli(argc, argv, std::cout, std::cerr); }
