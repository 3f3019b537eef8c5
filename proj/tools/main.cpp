#include "sepchain/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return sepchain::run_cli(argc, argv, std::cout, std::cerr); }
