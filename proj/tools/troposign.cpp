#include <iostream>

#include "troposign/cli.hpp"

int main(int argc, char** argv) { return troposign::cli::run(argc, argv, std::cout, std::cerr); }
