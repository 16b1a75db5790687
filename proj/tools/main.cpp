#include <iostream>

#include "braidforce/cli.hpp"

int main(int argc, char** argv) { return braidforce::cli_main(argc, argv, std::cout, std::cerr); }
