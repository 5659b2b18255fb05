#include <iostream>

#include "migraph/cli.hpp"

int main(int argc, char** argv) {
    return migraph::cli::run(argc, argv, std::cout, std::cerr);
}
