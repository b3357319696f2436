#include <cstdio>
#include <string>
#include <vector>

#include "genusq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    genusq::CliResult res = genusq::run_cli(args);
    std::fputs(res.output.c_str(), stdout);
    return res.exit_code;
}
