#include <iostream>

#include "spincrit/cli.hpp"

int main(int argc, char** argv) { return spincrit::cli::main_entry(argc, argv, std::cout, std::cerr); }
