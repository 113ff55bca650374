#include "branchdiv/cli/app.hpp"

#include <iostream>

int main(int argc, char** argv) { return branchdiv::cli::run_cli(argc, argv, std::cout, std::cerr); }
