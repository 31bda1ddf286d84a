#include <iostream>
#include <vector>

#include "algkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return algkit::run_cli(args, std::cout, std::cerr);
}
