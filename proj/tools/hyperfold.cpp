#include <iostream>

#include <unistd.h>

#include "hyperfold/cli.hpp"

int main(int argc, char** argv) {
    return hyperfold::cli::run_main(argc, argv, std::cin, std::cout, std::cerr, isatty(STDIN_FILENO) != 0);
}
