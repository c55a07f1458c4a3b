#include <iostream>

#include "sonocasimir/cli.hpp"

int main(int argc, char** argv) { return sono::cli::run(argc, argv, std::cout, std::cerr); }
