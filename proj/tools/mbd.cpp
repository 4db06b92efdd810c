#include <iostream>
#include <string>
#include <vector>

#include "mbd/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return mbd::cli::run(args, std::cout, std::cerr);
}
