#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return saddle::cli::run_command(args, std::cout, std::cerr);
}
