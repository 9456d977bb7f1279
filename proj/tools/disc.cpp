#include <iostream>

#include "disc/cli.hpp"

int main(int argc, char** argv)
{
    return disc::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
