#include "ivorder/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return ivorder::cli::run(argc, argv, std::cout, std::cerr);
}
