#include <iostream>

#include "stacksort/cli.hpp"

int main(int argc, char** argv) { return stacksort::cli::run(argc, argv, std::cout, std::cerr); }
