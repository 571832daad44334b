#include <iostream>
#include <string>
#include <vector>

#include "chordforest/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return chordforest::cli::run(args, std::cout, std::cerr);
}
