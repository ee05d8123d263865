#include <iostream>

#include "polarspinor/cli.hpp"

int main(int argc, char** argv) { return polarspinor::run(argc, argv, std::cout, std::cerr); }
