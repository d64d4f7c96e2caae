#include <iostream>

#include "girthsearch/cli.hpp"

int main(int argc, char** argv) { return girthsearch::run_cli(argc, argv, std::cout, std::cerr); }
