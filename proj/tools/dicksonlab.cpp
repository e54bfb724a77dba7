#include <iostream>

#include "dickson/cli.hpp"

int main(int argc, char** argv) { return dickson::cli::run(argc, argv, std::cout, std::cerr); }
