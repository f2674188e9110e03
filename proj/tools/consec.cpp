#include <iostream>

#include "consec/cli.hpp"

int main(int argc, char** argv) { return consec::run_cli(argc, argv, std::cout, std::cerr); }
