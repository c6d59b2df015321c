#include <algorithm>
#include <vector>

#include "hyperfold/fold.hpp"
#include "hyperfold/hyperops.hpp"
#include "run_stack.hpp"

namespace hyperfold {

Chain::Chain(std::vector<Natural> entries) : entries_{std::move(entries)} {
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].is_zero())
            throw HyperError(ErrorKind::DomainError,
                             "chain entry " + std::to_string(i) + " is 0; chain entries must be at least 1");
}

Chain::Chain(std::initializer_list<std::uint64_t> entries)
    : Chain(std::vector<Natural>(entries.begin(), entries.end())) {}

// Reference equations on the reversed chain (head = last written entry):
//
//   <>            = 1
//   <p>           = p
//   [q, p]        = p^q
//   (1 : p : xs)  = (p : xs)
//   (q : 1 : xs)  = (1 : xs)
//   (q : p : xs)  = ((q-1) : (q : (p-1) : xs) : xs)      (p, q > 1)
//
// No rule alters xs except by dropping its head, so the working chain is
// always [q, p] followed by a suffix of the reversed input; the machine
// keeps q, p and the suffix offset.
Natural conway_ref(const Chain& chain, Meter& meter) {
    std::vector<Natural> rev(chain.entries().rbegin(), chain.entries().rend());
    for (const Natural& x : rev) meter.observe(x);
    meter.charge();
    if (rev.empty()) return meter.observe(Natural{1});
    if (rev.size() == 1) return rev[0];

    struct Pending {
        Natural q;
        std::size_t suffix;
        bool operator==(const Pending&) const = default;
    };
    detail::RunStack<Pending> pending;

    const Natural one{1};
    Natural q = rev[0];
    Natural p = rev[1];
    std::size_t suffix = 2;
    for (;;) {
        meter.charge();
        if (suffix == rev.size()) {
            Natural value = arith::power(p, q, meter);
            if (pending.empty()) return value;
            Pending next = pending.pop();
            q = std::move(next.q);
            p = std::move(value);
            suffix = next.suffix;
        } else if (q == one) {
            q = std::move(p);
            p = rev[suffix++];
        } else if (p == one) {
            q = one;
            p = rev[suffix++];
        } else {
            Natural outer = q;
            pending.push({std::move(--outer), suffix});
            --p;
        }
    }
}

namespace {

// Closures of the fold back-end, defunctionalized.
//
//   K_0          = cpow
//   K_d          = aux o_d K_{d-1}, o_d = tail[len - d]
//   aux o k q    = foldn aux2 (\p -> k p o) q      -- G_{d,q}
//   G_{d,0} p    = K_{d-1} p o_d
//   G_{d,h} p    = foldn (G_{d,h-1} . (-1)) (K_{d-1} 0 o_d) p
struct KClosure {
    std::size_t depth = 0;
};

struct GClosure {
    std::size_t depth;
    std::uint64_t height;
};

struct GFrame {
    std::size_t depth;
    std::uint64_t height;
    Natural remaining;
};

} // namespace

Natural cback_prim(std::span<const Natural> tail, const Natural& q0, const Natural& p0, Meter& meter) {
    meter.observe(q0);
    meter.observe(p0);
    const KClosure outer = fold::foldr_seq(
        [&](const Natural& o, KClosure k) {
            meter.observe(o);
            meter.charge();
            return KClosure{k.depth + 1};
        },
        KClosure{}, tail);
    const auto o_of = [&](std::size_t depth) -> const Natural& { return tail[tail.size() - depth]; };

    enum class Call { K, G };
    std::vector<GFrame> frames;
    Call call = Call::K;
    std::size_t depth = outer.depth;
    std::uint64_t height = 0;
    Natural q = q0; // first argument of a K call
    Natural p = p0; // argument of a G call, second argument of a K call
    Natural value;
    for (;;) {
        meter.charge();
        if (call == Call::K) {
            if (depth == 0) {
                value = cpow(q, p, meter);
            } else {
                const GClosure g = fold::foldn(
                    [&](GClosure f) {
                        meter.charge();
                        return GClosure{f.depth, f.height + 1};
                    },
                    GClosure{depth, 0}, q);
                call = Call::G;
                height = g.height;
                continue;
            }
        } else if (height == 0) {
            // (\p -> k p o) p
            call = Call::K;
            q = std::move(p);
            p = o_of(depth);
            --depth;
            continue;
        } else {
            // fold base k 0 o
            frames.push_back({depth, height, std::move(p)});
            call = Call::K;
            q = Natural{};
            p = o_of(depth);
            --depth;
            continue;
        }

        while (!frames.empty() && frames.back().remaining.is_zero()) frames.pop_back();
        if (frames.empty()) return value;
        GFrame& top = frames.back();
        --top.remaining;
        call = Call::G;
        depth = top.depth;
        height = top.height - 1;
        p = arith::pred(value, meter);
    }
}

// Front-end: chains of length < 2 are answered directly; otherwise the
// chain is reversed, every entry decremented, and the two leading entries
// (the written last and second-to-last) become q and p of the back-end.
Natural conway_prim(const Chain& chain, Meter& meter) {
    const auto& entries = chain.entries();
    for (const Natural& x : entries) meter.observe(x);
    meter.charge();
    if (entries.empty()) return meter.observe(Natural{1});
    if (entries.size() == 1) return entries[0];

    std::vector<Natural> reduced;
    reduced.reserve(entries.size());
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) reduced.push_back(arith::pred(*it, meter));
    return cback_prim(std::span<const Natural>{reduced}.subspan(2), reduced[0], reduced[1], meter);
}

Evaluation conway_ref(const Chain& chain, Budget budget) {
    Meter meter{budget};
    Natural v = conway_ref(chain, meter);
    return {std::move(v), meter.stats()};
}

Evaluation conway_prim(const Chain& chain, Budget budget) {
    Meter meter{budget};
    Natural v = conway_prim(chain, meter);
    return {std::move(v), meter.stats()};
}

Evaluation cback_prim(std::span<const Natural> tail, const Natural& q, const Natural& p, Budget budget) {
    Meter meter{budget};
    Natural v = cback_prim(tail, q, p, meter);
    return {std::move(v), meter.stats()};
}

} // namespace hyperfold
