#include "wittconics/cli_app.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return wittconics::run_cli(args, std::cout, std::cerr);
}
