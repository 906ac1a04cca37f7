#include <iostream>
#include <span>

#include "lorasic/cli.hpp"

int main(int argc, char** argv)
{
    return lorasic::run_cli(std::span<char const* const>(argv, static_cast<std::size_t>(argc)), std::cout,
                            std::cerr);
}
