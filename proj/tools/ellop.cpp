#include "ellop/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    ellop::cli::RunResult result = ellop::cli::run_args(args);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
