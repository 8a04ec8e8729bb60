#include <iostream>
#include <string>
#include <vector>

#include "qconx/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return qconx::cli::run(args, std::cout, std::cerr);
}
