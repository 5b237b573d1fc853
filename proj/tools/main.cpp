#include <iostream>
#include <string>
#include <vector>

#include "hvloop/runner.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return hvloop::run(args, std::cout, std::cerr);
}
