#include <iostream>

#include "uavvlc/cli.hpp"

int main(int argc, char** argv) { return uavvlc::cli_main(argc, argv, std::cout, std::cerr); }
