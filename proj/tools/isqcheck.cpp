#include <iostream>

#include "isq/cli.hpp"

int main(int argc, char **argv) { return isq::cli_main(argc, argv, std::cout, std::cerr); }
