#include <iostream>

#include "lrgen/cli.hpp"

int main(int argc, char** argv) { return lrgen::cli::main(argc, argv, std::cout, std::cerr); }
