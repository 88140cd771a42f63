#include <iostream>

#include "recur/cli.hpp"

int main(int argc, char** argv) {
    return recur::cli_main(argc, argv, std::cout, std::cerr);
}
