#include <iostream>

#include "ramify/cli.hpp"

int main(int argc, char** argv) { return ramify::cli::run(argc, argv, std::cout, std::cerr, std::cin); }
