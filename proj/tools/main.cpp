#include <iostream>

#include "posmatch/cli.hpp"

int main(int argc, char** argv) { return posmatch::cli::run(argc, argv, std::cout, std::cerr); }
