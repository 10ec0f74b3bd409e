#include <iostream>
#include <string>
#include <vector>

#include "p3turan/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return p3turan::cli_run(args, std::cout, std::cerr);
}
