#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return urtlab::run(argc, argv, std::cout, std::cerr); }
