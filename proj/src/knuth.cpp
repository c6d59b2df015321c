#include <vector>

#include "hyperfold/fold.hpp"
#include "hyperfold/hyperops.hpp"
#include "run_stack.hpp"

namespace hyperfold {

// a ^0 b = a * b
// a ^n 0 = 1                          (n > 0)
// a ^n b = a ^(n-1) (a ^n (b - 1))    (n, b > 0)
Natural knuth_ref(const Natural& a, const Natural& level0, const Natural& b0, Meter& meter) {
    meter.observe(a);
    detail::RunStack<Natural> pending;
    Natural level = level0;
    Natural b = b0;
    for (;;) {
        meter.charge();
        Natural value;
        if (level.is_zero()) {
            value = arith::mul(a, b, meter);
        } else if (b.is_zero()) {
            value = meter.observe(Natural{1});
        } else {
            Natural outer = level;
            pending.push(std::move(--outer));
            --b;
            continue;
        }
        if (pending.empty()) return value;
        level = pending.pop();
        b = std::move(value);
    }
}

namespace {

// foldn (\f -> foldn f 1) (a *) n, identified by the number of wrappings.
struct KnuthClosure {
    std::uint64_t level = 0;
};

struct KnuthFrame {
    std::uint64_t level;
    Natural remaining;
};

} // namespace

Natural knuth_prim(const Natural& a, const Natural& n, const Natural& b, Meter& meter) {
    meter.observe(a);
    meter.charge(); // the section (a *)
    const KnuthClosure g = fold::foldn(
        [&](KnuthClosure inner) {
            meter.charge();
            return KnuthClosure{inner.level + 1};
        },
        KnuthClosure{}, n);

    std::vector<KnuthFrame> frames;
    std::uint64_t level = g.level;
    Natural arg = b;
    Natural value;
    for (;;) {
        meter.charge();
        if (level == 0) {
            value = arith::mul(a, arg, meter);
        } else if (level == 1) {
            // foldn (a *) 1 arg is a^arg
            value = arith::power(a, arg, meter);
        } else {
            frames.push_back({level, std::move(arg)});
            value = meter.observe(Natural{1}); // inner fold base
        }

        while (!frames.empty() && frames.back().remaining.is_zero()) frames.pop_back();
        if (frames.empty()) return value;
        KnuthFrame& top = frames.back();
        --top.remaining;
        level = top.level - 1;
        arg = std::move(value);
    }
}

Evaluation knuth_ref(const Natural& a, const Natural& level, const Natural& b, Budget budget) {
    Meter meter{budget};
    Natural v = knuth_ref(a, level, b, meter);
    return {std::move(v), meter.stats()};
}

Evaluation knuth_prim(const Natural& a, const Natural& level, const Natural& b, Budget budget) {
    Meter meter{budget};
    Natural v = knuth_prim(a, level, b, meter);
    return {std::move(v), meter.stats()};
}

} // namespace hyperfold
