#include <iostream>

#include "toricq/cli.hpp"

int main(int argc, char** argv) { return toricq::cli_main(argc, argv, std::cout, std::cerr); }
