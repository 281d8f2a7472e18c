#include <iostream>

#include "cdp/cli.hpp"

int main(int argc, char** argv) {
    return cdp::cli::run(argc, argv, std::cout, std::cerr);
}
