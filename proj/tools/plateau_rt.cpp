#include "plateau/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return plateau::run_cli(argc, argv, std::cout, std::cerr); }
