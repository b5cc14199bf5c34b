#include <iostream>
#include <string>
#include <vector>

#include "condgeo/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return condgeo::runCli(args, std::cout, std::cerr);
}
