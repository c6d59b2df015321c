#include <vector>

#include "hyperfold/fold.hpp"
#include "hyperfold/hyperops.hpp"
#include "run_stack.hpp"

namespace hyperfold {

// A(0, n) = n + 1
// A(m, 0) = A(m - 1, 1)
// A(m, n) = A(m - 1, A(m, n - 1))
//
// The machine holds the current call (m, n) and a stack of outer first
// arguments waiting for the value of an inner call.
Natural ack_ref(const Natural& m0, const Natural& n0, Meter& meter) {
    detail::RunStack<Natural> pending;
    Natural m = m0;
    Natural n = n0;
    for (;;) {
        meter.charge();
        if (m.is_zero()) {
            Natural value = arith::succ(n, meter);
            if (pending.empty()) return value;
            m = pending.pop();
            n = std::move(value);
        } else if (n.is_zero()) {
            --m;
            n = Natural{1};
        } else {
            Natural outer = m;
            pending.push(std::move(--outer));
            --n;
        }
    }
}

namespace {

// The closure foldn aux (+1) m with aux f = foldn f (f 1), identified by how
// many times aux has been applied to the successor function.
struct AckClosure {
    std::uint64_t level = 0;
};

struct AckFrame {
    std::uint64_t level; // closure being applied
    Natural remaining;   // inner fold iterations still to run
};

} // namespace

Natural ack_prim(const Natural& m, const Natural& n, Meter& meter) {
    const AckClosure f = fold::foldn(
        [&](AckClosure inner) {
            meter.charge();
            return AckClosure{inner.level + 1};
        },
        AckClosure{}, m);

    std::vector<AckFrame> frames;
    std::uint64_t level = f.level;
    Natural arg = n;
    Natural value;
    for (;;) {
        // call: apply closure `level` to `arg`
        meter.charge();
        if (level == 0) {
            value = arith::succ(arg, meter);
        } else if (level == 1) {
            // foldn (+1) ((+1) 1) arg: a fold of successors is one addition
            value = arith::add(arith::succ(Natural{1}, meter), arg, meter);
        } else {
            frames.push_back({level, std::move(arg)});
            level -= 1;
            arg = Natural{1};
            continue;
        }

        // return `value` to the innermost pending fold
        while (!frames.empty() && frames.back().remaining.is_zero()) frames.pop_back();
        if (frames.empty()) return value;
        AckFrame& top = frames.back();
        --top.remaining;
        level = top.level - 1;
        arg = std::move(value);
    }
}

Evaluation ack_ref(const Natural& m, const Natural& n, Budget budget) {
    Meter meter{budget};
    Natural v = ack_ref(m, n, meter);
    return {std::move(v), meter.stats()};
}

Evaluation ack_prim(const Natural& m, const Natural& n, Budget budget) {
    Meter meter{budget};
    Natural v = ack_prim(m, n, meter);
    return {std::move(v), meter.stats()};
}

} // namespace hyperfold
