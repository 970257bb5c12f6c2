#include <iostream>
#include <string>
#include <vector>

#include "pencilpairs/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pp::run(args, std::cout, std::cerr);
}
