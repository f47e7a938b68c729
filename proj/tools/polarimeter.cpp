#include <iostream>

#include "polarimeter/cli.hpp"

int main(int argc, char** argv) { return polarimeter::cli_main(argc, argv, std::cout, std::cerr); }
