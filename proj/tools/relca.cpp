#include "relca/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return relca::cli_main(argc, argv, std::cout, std::cerr); }
