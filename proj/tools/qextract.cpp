#include <iostream>

#include <qextract/cli.hpp>

int main(int argc, char** argv)
{
    return qextract::cli::run(argc, argv, std::cout, std::cerr);
}
