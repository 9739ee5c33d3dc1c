#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return slocc::cli::run(argc, argv, slocc::classify, std::cout, std::cerr); }
