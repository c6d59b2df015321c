#pragma once

// Ackermann, Knuth up-arrows and Conway chained arrows, each in two forms:
//
//   *_ref   the self-referential defining equations, run on an explicit
//           rewriting machine (one step per equation application);
//   *_prim  the fold forms
//             ack    = foldn (\f -> foldn f (f 1)) (+1)
//             knuth  = foldn (\f -> foldn f 1) . (*)
//             cback  = foldr (\o k -> foldn (\f -> foldn (f . (-1)) (k 0 o))
//                                           (\p -> k p o)) cpow
//           with closures defunctionalized and applied on an explicit stack.
//
// Every function comes in two flavours: one taking a Budget and returning
// the value with its stats, and one threading a caller-owned Meter so that
// several evaluations can share a budget.

#include <span>
#include <vector>

#include "hyperfold/budget.hpp"
#include "hyperfold/natural.hpp"

namespace hyperfold {

struct Evaluation {
    Natural value;
    EvalStats stats;

    friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

/// A Conway chain in written order: entries()[0] is the leftmost element.
/// Every entry is at least 1; the empty chain denotes 1.
class Chain {
public:
    Chain() = default;
    /// Throws HyperError(DomainError) if any entry is zero.
    explicit Chain(std::vector<Natural> entries);
    Chain(std::initializer_list<std::uint64_t> entries);

    const std::vector<Natural>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    friend bool operator==(const Chain&, const Chain&) = default;

private:
    std::vector<Natural> entries_;
};

Natural ack_ref(const Natural& m, const Natural& n, Meter& meter);
Natural ack_prim(const Natural& m, const Natural& n, Meter& meter);
Natural knuth_ref(const Natural& a, const Natural& level, const Natural& b, Meter& meter);
Natural knuth_prim(const Natural& a, const Natural& level, const Natural& b, Meter& meter);
Natural conway_ref(const Chain& chain, Meter& meter);
Natural conway_prim(const Chain& chain, Meter& meter);

/// The fold back-end on its own. `reduced_tail` is the chain without its
/// last two entries, reversed, with every entry decremented; q and p are the
/// decremented last and second-to-last entries.
Natural cback_prim(std::span<const Natural> reduced_tail, const Natural& q, const Natural& p, Meter& meter);

/// (p+1)^(q+1) by budget-counted square-and-multiply.
Natural cpow(const Natural& q, const Natural& p, Meter& meter);

Evaluation ack_ref(const Natural& m, const Natural& n, Budget budget = {});
Evaluation ack_prim(const Natural& m, const Natural& n, Budget budget = {});
Evaluation knuth_ref(const Natural& a, const Natural& level, const Natural& b, Budget budget = {});
Evaluation knuth_prim(const Natural& a, const Natural& level, const Natural& b, Budget budget = {});
Evaluation conway_ref(const Chain& chain, Budget budget = {});
Evaluation conway_prim(const Chain& chain, Budget budget = {});
Evaluation cback_prim(std::span<const Natural> reduced_tail, const Natural& q, const Natural& p,
                      Budget budget = {});
Evaluation cpow(const Natural& q, const Natural& p, Budget budget = {});

namespace arith {

// Budget-counted arithmetic shared by both evaluator families. Each call
// charges at least one step and observes its result.
Natural succ(const Natural& x, Meter& meter);
Natural add(const Natural& x, const Natural& y, Meter& meter);
Natural mul(const Natural& x, const Natural& y, Meter& meter);
/// Square-and-multiply, one step per squaring or multiplication. Fails fast
/// with MagnitudeExceeded when the estimated result is wider than the
/// digit budget.
Natural power(const Natural& base, const Natural& exp, Meter& meter);
/// x - 1; DomainError for zero.
Natural pred(const Natural& x, Meter& meter);

} // namespace arith

} // namespace hyperfold
