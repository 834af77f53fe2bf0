#include <iostream>

#include "parhom/cli.hpp"

int main(int argc, char** argv) { return parhom::cli::run(argc, argv, std::cout, std::cerr); }
