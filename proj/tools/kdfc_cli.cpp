#include <iostream>

#include "kdfc/cli.hpp"

int main(int argc, char** argv) { return kdfc::cli::run_cli(argc, argv, std::cout, std::cerr); }
