#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "hyperfold/natural.hpp"

namespace hyperfold {

/// Resource limits for one evaluation.
struct Budget {
    std::uint64_t max_steps = 10'000'000;
    std::uint64_t max_digits = 100'000;

    friend bool operator==(const Budget&, const Budget&) = default;
};

struct EvalStats {
    std::uint64_t steps_used = 0;
    std::uint64_t peak_digits = 0;

    friend bool operator==(const EvalStats&, const EvalStats&) = default;
};

enum class ErrorKind { BudgetExceeded, MagnitudeExceeded, DomainError, ConstructionLimit };

const char* to_string(ErrorKind kind);

class HyperError : public std::runtime_error {
public:
    HyperError(ErrorKind kind, const std::string& detail, EvalStats stats = {})
        : std::runtime_error(detail), kind_{kind}, stats_{stats} {}

    ErrorKind kind() const { return kind_; }
    const EvalStats& stats() const { return stats_; }

private:
    ErrorKind kind_;
    EvalStats stats_;
};

/// Enforces a Budget and accumulates EvalStats.
///
/// Every evaluator threads one Meter through its work: `charge` for each
/// rewrite, fold-generator application or arithmetic operation, `observe`
/// for each Natural it produces.
class Meter {
public:
    explicit Meter(Budget budget);

    void charge(std::uint64_t steps = 1);
    void charge(const Natural& steps);

    /// Records the digit count of a produced value; throws MagnitudeExceeded
    /// when it is wider than max_digits.
    const Natural& observe(const Natural& value);

    [[noreturn]] void fail(ErrorKind kind, const std::string& detail) const;

    const Budget& budget() const { return budget_; }
    const EvalStats& stats() const { return stats_; }
    std::uint64_t remaining_steps() const { return budget_.max_steps - stats_.steps_used; }

private:
    Budget budget_;
    EvalStats stats_;
};

} // namespace hyperfold
