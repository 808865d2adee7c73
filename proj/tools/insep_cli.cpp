#include <iostream>

#include "insep/cli.hpp"

int main(int argc, char** argv) { return insep::cli_dispatch(argc, argv, std::cout, std::cerr); }
