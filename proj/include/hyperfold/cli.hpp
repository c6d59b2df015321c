#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>

#include "hyperfold/budget.hpp"
#include "hyperfold/notation.hpp"

namespace hyperfold::cli {

struct Config {
    notation::Form form = notation::Form::Both;
    std::uint64_t max_steps = 10'000'000;
    std::uint64_t max_digits = 100'000;
    bool quiet = false;

    Budget budget() const { return {max_steps, max_digits}; }
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int selftest_failed = 1;
inline constexpr int parse_error = 2;
inline constexpr int budget_exceeded = 3;
inline constexpr int domain_error = 4;
inline constexpr int mismatch = 5;
inline constexpr int usage = 64;
} // namespace exit_code

/// BudgetExceeded, MagnitudeExceeded and ConstructionLimit are all resource
/// exhaustion and share exit code 3.
int exit_code_for(ErrorKind kind);

int run_eval(std::string_view text, const Config& config, std::ostream& out, std::ostream& err);

/// One expression per line until ":quit" or end of input. A prompt is
/// written only when `interactive` is set.
int run_repl(const Config& config, std::istream& in, std::ostream& out, std::ostream& err, bool interactive = false);

enum class SelftestLevel { Quick, Full };

int run_selftest(SelftestLevel level, const Config& config, std::ostream& out, std::ostream& err);

/// Full command line: `eval <EXPR>`, `repl`, `selftest [quick|full]`.
int run_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err,
             bool interactive = false);

} // namespace hyperfold::cli
