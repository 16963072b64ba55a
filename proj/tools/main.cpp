#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return qmlab::cli::run(argc, argv, std::cout, std::cerr); }
