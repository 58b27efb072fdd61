#include <iostream>
#include <string>
#include <vector>

#include "ttlab/cli/run.hpp"

int main(int argc, char * argv[])
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return ttlab::cli::run(args, std::cout, std::cerr);
}
