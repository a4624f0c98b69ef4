#include <iostream>

#include "appellkit/cli.hpp"

int main(int argc, char** argv) { return appellkit::run_cli(argc, argv, std::cout, std::cerr); }
