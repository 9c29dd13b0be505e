#include "mindenom/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return mindenom::run_cli(argc, argv, std::cout, std::cerr);
}
