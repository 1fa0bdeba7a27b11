#include <iostream>
#include <string>
#include <vector>

#include "jmc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return jmc::cli::run(args, std::cout, std::cerr);
}
