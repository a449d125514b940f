#include <iostream>

#include "lhnet/cli.hpp"

int main(int argc, char** argv) {
    return lhnet::run_cli(argc, argv, std::cout, std::cerr);
}
