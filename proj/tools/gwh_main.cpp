#include <iostream>

#include "gwh/cli.hpp"

int main(int argc, char** argv) { return gwh::run_cli(argc, argv, std::cout, std::cerr); }
