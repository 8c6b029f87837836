#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ellop::cli {

// Exit codes: 0 all checks passed, 2 input error, 3 a checked claim failed.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCheckFailed = 3;

struct Invocation {
    std::string command;
    std::optional<std::string> input_path;
    std::optional<std::string> poly_text;    // --poly
    std::optional<std::string> op_text;      // --op
    std::optional<std::string> point_text;   // --point "a,b"
    std::optional<std::string> model;        // --model classical|rough|algebraic|kaehler
    std::optional<std::string> mode;         // --mode as-written|balanced
    std::optional<std::string> order;        // --order grevlex|grlex|lex
    std::optional<std::uint64_t> seed;       // --seed
    bool json = false;                       // --json
    bool all_points = false;                 // --all-points
};

struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

// Dispatches one command. Never throws; failures come back as exit codes
// with messages on `err` (input errors) or structured reports on `out`.
RunResult run(const Invocation& inv);

// Parses argv-style arguments (without the program name) and dispatches.
RunResult run_args(const std::vector<std::string>& args);

std::string usage_text();

}  // namespace ellop::cli
