#include <iostream>
#include <string>
#include <vector>

#include "regime_lab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return regime_lab::cli::run(args, std::cout, std::cerr);
}
