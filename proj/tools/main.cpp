#include <iostream>

#include "crossgp/cli/app.hpp"

int main(int argc, char** argv)
{
    return crossgp::cli::run_cli(argc, argv, std::cout, std::cerr);
}
