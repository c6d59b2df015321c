#include "hyperfold/budget.hpp"

namespace hyperfold {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::MagnitudeExceeded: return "MagnitudeExceeded";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ConstructionLimit: return "ConstructionLimit";
    }
    return "?";
}

Meter::Meter(Budget budget) : budget_{budget} {
    if (budget_.max_steps < 1 || budget_.max_digits < 1)
        throw std::invalid_argument("budget limits must be at least 1");
}

void Meter::charge(std::uint64_t steps) {
    if (steps > remaining_steps()) {
        stats_.steps_used = budget_.max_steps;
        fail(ErrorKind::BudgetExceeded,
             "step budget exceeded (max_steps=" + std::to_string(budget_.max_steps) + ")");
    }
    stats_.steps_used += steps;
}

void Meter::charge(const Natural& steps) {
    if (!steps.fits_u64()) {
        stats_.steps_used = budget_.max_steps;
        fail(ErrorKind::BudgetExceeded,
             "step budget exceeded (max_steps=" + std::to_string(budget_.max_steps) + ")");
    }
    charge(steps.to_u64());
}

const Natural& Meter::observe(const Natural& value) {
    // Exact digit counting is only needed when the value might raise the peak.
    const std::uint64_t bound = value.digits_upper_bound();
    if (bound <= stats_.peak_digits) return value;
    if (bound - 1 > budget_.max_digits)
        fail(ErrorKind::MagnitudeExceeded, "magnitude limit exceeded: value has at least " + std::to_string(bound - 1) +
                                               " digits (max_digits=" + std::to_string(budget_.max_digits) + ")");
    const std::uint64_t d = value.digits();
    if (d > budget_.max_digits)
        fail(ErrorKind::MagnitudeExceeded, "magnitude limit exceeded: value has " + std::to_string(d) +
                                               " digits (max_digits=" + std::to_string(budget_.max_digits) + ")");
    if (d > stats_.peak_digits) stats_.peak_digits = d;
    return value;
}

void Meter::fail(ErrorKind kind, const std::string& detail) const { throw HyperError(kind, detail, stats_); }

} // namespace hyperfold
