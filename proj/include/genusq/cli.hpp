#pragma once

#include <string>
#include <vector>

namespace genusq {

// Exit codes: 0 success, 1 sweep found failures, 2 invalid input,
// 3 internal error (unhandled construction case or alike).
struct CliResult {
    int exit_code = 0;
    std::string output;
};

// Runs one command given the arguments after the program name, in natural
// order. All output (including diagnostics) is returned, not printed.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace genusq
