#include <iostream>

#include "contextlab/cli.hpp"

int main(int argc, char** argv) { return contextlab::cli::run(argc, argv, std::cout, std::cerr); }
