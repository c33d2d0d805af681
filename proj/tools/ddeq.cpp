#include <iostream>
#include <vector>

#include "ddeq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ddeq::cli_main(args, std::cout, std::cerr);
}
