#include <iostream>

#include "prismcurv/cli.hpp"

int main(int argc, char** argv) { return prismcurv::run_cli(argc, argv, std::cout, std::cerr); }
