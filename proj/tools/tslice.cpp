#include <iostream>

#include "tslice/cli.hpp"

int main(int argc, char** argv) { return tslice::run_cli(argc, argv, std::cout, std::cerr); }
