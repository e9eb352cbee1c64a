#include <iostream>

#include "sgl_cli/app.hpp"

int main(int argc, char** argv) {
    return sgl::cli::run_cli(argc, argv, std::cout, std::cerr);
}
