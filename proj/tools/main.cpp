#include <iostream>

#include "qlmor/cli.hpp"

int main(int argc, char** argv) { return qlmor::cli::cli_main(argc, argv, std::cout, std::cerr); }
