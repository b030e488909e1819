#include <iostream>

#include "bipmc/cli/commands.hpp"

int main(int argc, char** argv) { return bipmc::cli::run(argc, argv, std::cout, std::cerr); }
