#include <iostream>

#include "catkit/cli.hpp"

int main(int argc, char** argv) { return catkit::cli::run(argc, argv, std::cout, std::cerr); }
