#include <iostream>
#include <string>
#include <vector>

#include "splicekit/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    const auto result = splicekit::cli::run(args, std::cin);
    auto& out = result.exit_code == 2 ? std::cerr : std::cout;
    out << splicekit::cli::render(result.report, result.format);
    return result.exit_code;
}
