#include <iostream>

#include "pivots/cli.hpp"

int main(int argc, char** argv) { return pivots::run_cli(argc, argv, std::cout, std::cerr); }
