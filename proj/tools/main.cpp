#include <iostream>
#include <string>
#include <vector>

#include "padfeas/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return padfeas::dispatch(args, std::cout, std::cerr);
}
