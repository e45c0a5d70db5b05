#include <iostream>

#include "tvq/cli.hpp"

int main(int argc, char** argv) { return tvq::run_cli(argc, argv, std::cout, std::cerr); }
