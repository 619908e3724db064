#include <iostream>

#include "chiralkit/cli/commands.hpp"

int main(int argc, char** argv) { return chiralkit::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
