#include <iostream>

#include "greyml/cli.hpp"

int main(int argc, char** argv) {
    return greyml::cli::run_cli(argc, argv, std::cout, std::cerr);
}
