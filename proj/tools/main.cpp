#include <iostream>
#include <string>
#include <vector>

#include "l1coh/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return l1coh::cli::run_cli(args, std::cout, std::cerr);
}
