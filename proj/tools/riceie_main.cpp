#include <iostream>
#include <string>
#include <vector>

#include "riceie/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return riceie::run_cli(args, std::cout, std::cerr);
}
