#include <iostream>

#include "qcl/cli.hpp"

int main(int argc, char** argv) { return qcl::cli::run(argc, argv, std::cout, std::cerr); }
