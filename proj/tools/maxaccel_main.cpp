#include <iostream>
#include <string>
#include <vector>

#include "maxaccel/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return maxaccel::cli::dispatch(args, std::cout, std::cerr);
}
