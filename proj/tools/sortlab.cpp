#include <iostream>

#include "sortlab/cli.hpp"

int main(int argc, char** argv) { return sortlab::run_cli(argc, argv, std::cout, std::cerr); }
