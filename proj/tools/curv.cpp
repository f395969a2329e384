#include <iostream>

#include "curv/cli.hpp"

int main(int argc, char** argv) {
    return curv::cli::dispatch_argv(argc, argv, std::cout, std::cerr);
}
