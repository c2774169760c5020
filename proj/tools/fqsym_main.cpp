#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "fqsym/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fqsym::cli::run_cli(args, std::cout, std::cerr, std::getenv("FQSYM_MAX_ENUM"));
}
