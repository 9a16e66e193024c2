#include <iostream>
#include <string>
#include <vector>

#include "dmorse/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return dmorse::run(args, std::cout, std::cerr);
}
