#include <iostream>

#include "ugb/cli.hpp"

int main(int argc, char** argv) { return ugb::cli_main(argc, argv, std::cout, std::cerr); }
