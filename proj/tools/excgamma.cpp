#include <iostream>

#include "excgamma/cli.hpp"

int main(int argc, char** argv) { return excgamma::cli::run_cli(argc, argv, std::cout, std::cerr); }
