#include <iostream>

#include "linrank/cli.hpp"

int main(int argc, char** argv)
{
    return linrank::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
