#include <iostream>

#include "tridirac/cli.hpp"

int main(int argc, char** argv) { return tridirac::cli::main(argc, argv, std::cout, std::cerr); }
