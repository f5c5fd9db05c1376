#include <iostream>

#include <ellcob/cli.hpp>

int main(int argc, char **argv)
{
    return ellcob::cli::run(argc, argv, std::cout, std::cerr);
}
