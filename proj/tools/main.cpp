#include <iostream>

#include "hecke/cli.hpp"

int main(int argc, char** argv) { return hecke::run_cli(argc, argv, std::cout, std::cerr); }
