#include <iostream>

#include "ascenter/cli.hpp"

int main(int argc, char** argv) { return ascenter::cli::run(argc, argv, std::cout, std::cerr); }
