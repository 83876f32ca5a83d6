#include <iostream>

#include "trusskit/cli.hpp"

int main(int argc, char** argv) { return trusskit::cli::run(argc, argv, std::cout, std::cerr); }
