#include <iostream>

#include "ffm/cli.hpp"

int main(int argc, char** argv) { return ffm::cli::main_entry(argc, argv, std::cout, std::cerr); }
