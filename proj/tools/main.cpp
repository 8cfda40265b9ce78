#include <iostream>

#include "arrcomb/cli.hpp"

int main(int argc, char** argv) { return arrcomb::cli::run(argc, argv, std::cout, std::cerr); }
