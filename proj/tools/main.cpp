#include <iostream>
#include <string>
#include <vector>

#include "zagreb/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return zagreb::run_cli(args, std::cout, std::cerr);
}
