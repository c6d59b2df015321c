#include "doctest.h"

#include <array>
#include <functional>
#include <random>
#include <vector>

#include "hyperfold/hyperops.hpp"
#include "oracle.hpp"

using namespace hyperfold;

namespace {

const Natural kTower3{7625597484987u}; // 3^^3, from oracle::knuth(3,2,3)

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const HyperError& e) {
        return e.kind();
    }
    FAIL("no HyperError thrown");
    return ErrorKind::DomainError;
}

Chain chain_of(const std::vector<std::uint64_t>& xs) { return Chain{std::vector<Natural>(xs.begin(), xs.end())}; }

} // namespace

TEST_CASE("ackermann examples") {
    CHECK(ack_ref(0u, 5u).value == Natural{6});
    CHECK(ack_ref(2u, 3u).value == Natural{9});
    CHECK(ack_ref(3u, 3u).value == Natural{61});
    CHECK(ack_prim(0u, 9u).value == Natural{10});
    CHECK(ack_prim(3u, 3u).value == Natural{61});
    CHECK(ack_prim(2u, 0u).value == Natural{3});
    CHECK(ack_ref(1u, 1u).value == Natural{3});
}

TEST_CASE("ackermann forms match the naive oracle") {
    for (unsigned m = 0; m <= 3; ++m)
        for (unsigned n = 0; n <= 6; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            const Natural expected{oracle::ack(m, n)};
            CHECK(ack_ref(m, n).value == expected);
            CHECK(ack_prim(m, n).value == expected);
        }
}

TEST_CASE("ack_ref handles millions of rewrites without native recursion") {
    // A(3,8) = 2^11 - 3; the naive recursion makes 2785999 calls
    const Evaluation r = ack_ref(3u, 8u);
    CHECK(r.value == Natural{2045});
    CHECK(r.stats.steps_used > oracle::ack_calls(3, 8));
}

TEST_CASE("ack_prim reaches ack(4,1)") {
    const Evaluation r = ack_prim(4u, 1u);
    CHECK(r.value == Natural{65533});
    CHECK(r.stats.steps_used < 10'000'000u);
}

TEST_CASE("knuth examples") {
    CHECK(knuth_ref(2u, 0u, 3u).value == Natural{6});
    CHECK(knuth_ref(5u, 3u, 0u).value == Natural{1});
    CHECK(knuth_ref(3u, 2u, 3u).value == kTower3);
    CHECK(knuth_prim(2u, 2u, 3u).value == Natural{16});
    CHECK(knuth_prim(7u, 4u, 0u).value == Natural{1});
    CHECK(knuth_prim(3u, 1u, 4u).value == Natural{81});
}

TEST_CASE("knuth domain edges follow the equations") {
    CHECK(knuth_ref(0u, 0u, 5u).value == Natural{0});
    CHECK(knuth_prim(0u, 0u, 5u).value == Natural{0});
    for (unsigned a = 0; a <= 1; ++a)
        for (unsigned n = 0; n <= 3; ++n)
            for (unsigned b = 0; b <= 4; ++b) {
                CAPTURE(a);
                CAPTURE(n);
                CAPTURE(b);
                const Natural expected{oracle::knuth(a, n, b)};
                CHECK(knuth_ref(a, n, b).value == expected);
                CHECK(knuth_prim(a, n, b).value == expected);
            }
}

TEST_CASE("knuth forms match the naive oracle") {
    std::vector<std::array<unsigned, 3>> grid;
    for (unsigned a = 0; a <= 3; ++a)
        for (unsigned n = 0; n <= 2; ++n)
            for (unsigned b = 0; b <= 3; ++b) grid.push_back({a, n, b});
    grid.push_back({2, 3, 2});
    grid.push_back({2, 2, 4});
    grid.push_back({2, 3, 3});
    for (const auto& [a, n, b] : grid) {
        CAPTURE(a);
        CAPTURE(n);
        CAPTURE(b);
        const Natural expected{oracle::knuth(a, n, b)};
        CHECK(knuth_ref(a, n, b).value == expected);
        CHECK(knuth_prim(a, n, b).value == expected);
    }
}

TEST_CASE("cpow") {
    CHECK(cpow(0u, 0u).value == Natural{1});
    CHECK(cpow(2u, 1u).value == Natural{8});
    CHECK(cpow(1u, 2u).value == Natural{9});
    CHECK(cpow(26u, 2u).value == kTower3);
}

TEST_CASE("conway examples") {
    CHECK(conway_ref(Chain{}).value == Natural{1});
    CHECK(conway_ref(Chain{7}).value == Natural{7});
    CHECK(conway_ref(Chain{2, 3}).value == Natural{8});
    CHECK(conway_ref(Chain{2, 2, 2}).value == Natural{4});
    CHECK(conway_ref(Chain{3, 3, 2}).value == kTower3);
    CHECK(conway_prim(Chain{4, 1, 5}).value == Natural{4});
    CHECK(conway_prim(Chain{2, 2, 2}).value == Natural{4});
    CHECK(conway_prim(Chain{5, 2}).value == Natural{25});
    CHECK(conway_prim(Chain{}).value == Natural{1});
    CHECK(conway_prim(Chain{7}).value == Natural{7});
}

TEST_CASE("cback back-end in isolation") {
    CHECK(cback_prim({}, 2u, 1u).value == Natural{8});
    CHECK(cback_prim({}, 0u, 0u).value == Natural{1});
    // <2->2->2> reversed and decremented is [1,1,1]: q = 1, p = 1, tail [1]
    const std::vector<Natural> tail{Natural{1}};
    CHECK(cback_prim(tail, 1u, 1u).value == conway_ref(Chain{2, 2, 2}).value);
}

TEST_CASE("conway forms match the naive oracle") {
    std::vector<std::vector<std::uint64_t>> chains{{}};
    for (std::uint64_t x = 1; x <= 3; ++x) {
        chains.push_back({x});
        for (std::uint64_t y = 1; y <= 3; ++y) {
            chains.push_back({x, y});
            for (std::uint64_t z = 1; z <= 3; ++z)
                if (!(x == 3 && y == 3 && z == 3)) chains.push_back({x, y, z});
        }
    }
    chains.push_back({2, 2, 2, 2});
    chains.push_back({4, 1, 5});
    chains.push_back({2, 2, 3, 4, 5});
    chains.push_back({3, 2, 1, 9});
    chains.push_back({1, 5, 5, 5});
    chains.push_back({2, 4, 2});
    chains.push_back({4, 2, 2, 1, 2});
    for (const auto& c : chains) {
        const Natural expected{oracle::conway(c)};
        CHECK(conway_ref(chain_of(c)).value == expected);
        CHECK(conway_prim(chain_of(c)).value == expected);
    }
}

TEST_CASE("3->3->3 exhausts any budget in both forms") {
    const Chain c{3, 3, 3};
    CHECK(kind_of([&] { conway_ref(c); }) == ErrorKind::BudgetExceeded);
    const ErrorKind prim = kind_of([&] { conway_prim(c); });
    CHECK((prim == ErrorKind::BudgetExceeded || prim == ErrorKind::MagnitudeExceeded));
}

TEST_CASE("chains reject zero entries") {
    CHECK(kind_of([] { Chain{3, 0, 2}; }) == ErrorKind::DomainError);
    CHECK(kind_of([] { Chain{0}; }) == ErrorKind::DomainError);
}

TEST_CASE("fold recurrences hold on the primitive forms") {
    int cases = 0;
    for (unsigned m = 1; m <= 3; ++m) {
        CHECK(ack_prim(m, 0u).value == ack_prim(m - 1, 1u).value);
        for (unsigned n = 1; n <= 4; ++n) {
            CHECK(ack_prim(m, n).value == ack_prim(m - 1, ack_prim(m, n - 1).value).value);
            ++cases;
        }
    }
    for (unsigned a = 0; a <= 3; ++a)
        for (unsigned n = 1; n <= 2; ++n)
            for (unsigned b = 1; b <= 3; ++b) {
                CHECK(knuth_prim(a, n, b).value == knuth_prim(a, n - 1, knuth_prim(a, n, b - 1).value).value);
                ++cases;
            }
    // the generated random suite: sampled within the feasible region of each recurrence
    std::mt19937 rng{314159};
    for (int i = 0; i < 100; ++i) {
        const unsigned m = std::uniform_int_distribution<unsigned>(1, 3)(rng);
        const unsigned n = std::uniform_int_distribution<unsigned>(1, m == 3 ? 6 : 40)(rng);
        CHECK(ack_prim(m, n).value == ack_prim(m - 1, ack_prim(m, n - 1).value).value);
        const unsigned a = std::uniform_int_distribution<unsigned>(0, 5)(rng);
        const unsigned level = std::uniform_int_distribution<unsigned>(1, 2)(rng);
        const unsigned b = std::uniform_int_distribution<unsigned>(1, level == 2 ? 2 : 30)(rng);
        CHECK(knuth_prim(a, level, b).value ==
              knuth_prim(a, level - 1, knuth_prim(a, level, b - 1).value).value);
        cases += 2;
    }
    CHECK(cases >= 100);
}

TEST_CASE("chain collapse rules in written order") {
    std::vector<std::vector<std::uint64_t>> xs{{}};
    for (std::uint64_t a = 1; a <= 3; ++a) {
        xs.push_back({a});
        for (std::uint64_t b = 1; b <= 3; ++b) xs.push_back({a, b});
    }
    int cases = 0;
    for (const auto& x : xs)
        for (std::uint64_t p = 1; p <= 3; ++p) {
            auto with = [&](std::initializer_list<std::uint64_t> tail) {
                std::vector<std::uint64_t> c = x;
                c.insert(c.end(), tail);
                return chain_of(c);
            };
            CAPTURE(x.size());
            CAPTURE(p);
            // <X -> p -> 1> = <X -> p>; both sides diverge for X = [3,3], p = 3
            if (with({p}) == Chain{3, 3, 3}) {
                CHECK(kind_of([&] { conway_prim(with({p, 1})); }) == kind_of([&] { conway_prim(with({p})); }));
            } else {
                CHECK(conway_prim(with({p, 1})).value == conway_prim(with({p})).value);
            }
            // <X -> 1 -> q> = <X -> 1>
            for (std::uint64_t q = 1; q <= 3; ++q) {
                CHECK(conway_prim(with({1, q})).value == conway_prim(with({1})).value);
                ++cases;
            }
        }
    CHECK(cases >= 100);
}

TEST_CASE("cross-hierarchy identity <a->b->c> = a ^c b") {
    for (unsigned a = 2; a <= 3; ++a)
        for (unsigned b = 1; b <= 3; ++b)
            for (unsigned c = 1; c <= 2; ++c) {
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(c);
                CHECK(oracle::conway({a, b, c}) == oracle::knuth(a, c, b));
                CHECK(conway_ref(Chain{a, b, c}).value == knuth_ref(a, c, b).value);
                CHECK(conway_prim(Chain{a, b, c}).value == knuth_prim(a, c, b).value);
            }
}

TEST_CASE("budget monotonicity and determinism") {
    struct Case {
        const char* name;
        std::function<Evaluation(Budget)> run;
    };
    const std::vector<Case> cases{
        {"ack_ref(3,4)", [](Budget b) { return ack_ref(3u, 4u, b); }},
        {"ack_prim(3,4)", [](Budget b) { return ack_prim(3u, 4u, b); }},
        {"knuth_ref(3,2,3)", [](Budget b) { return knuth_ref(3u, 2u, 3u, b); }},
        {"knuth_prim(2,2,4)", [](Budget b) { return knuth_prim(2u, 2u, 4u, b); }},
        {"conway_ref(2,3,3)", [](Budget b) { return conway_ref(Chain{2, 3, 3}, b); }},
        {"conway_prim(2,2,2,2)", [](Budget b) { return conway_prim(Chain{2, 2, 2, 2}, b); }},
        {"conway_prim(3,3,2)", [](Budget b) { return conway_prim(Chain{3, 3, 2}, b); }},
    };
    for (const auto& c : cases) {
        CAPTURE(c.name);
        const Evaluation base = c.run(Budget{});
        CHECK(c.run(Budget{}) == base);
        // the exact consumption is itself a sufficient budget, one less is not
        const Budget tight{base.stats.steps_used, base.stats.peak_digits};
        CHECK(c.run(tight) == base);
        for (const Budget bigger : {Budget{tight.max_steps * 2, tight.max_digits}, Budget{tight.max_steps, 1000},
                                    Budget{100'000'000, 200'000}})
            CHECK(c.run(bigger) == base);
        CHECK(kind_of([&] { c.run(Budget{tight.max_steps - 1, tight.max_digits}); }) == ErrorKind::BudgetExceeded);
        if (tight.max_digits > 1)
            CHECK(kind_of([&] { c.run(Budget{tight.max_steps, tight.max_digits - 1}); }) ==
                  ErrorKind::MagnitudeExceeded);
    }
}

TEST_CASE("budget errors carry stats within the limits") {
    try {
        conway_ref(Chain{3, 3, 3}, Budget{1000, 100'000});
        FAIL("expected BudgetExceeded");
    } catch (const HyperError& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
        CHECK(e.stats().steps_used <= 1000u);
    }
    // magnitude pre-check fails fast without spending the step budget
    const Budget small_digits{10'000'000, 50};
    try {
        knuth_prim(10u, 1u, 1000u, small_digits);
        FAIL("expected MagnitudeExceeded");
    } catch (const HyperError& e) {
        CHECK(e.kind() == ErrorKind::MagnitudeExceeded);
        CHECK(e.stats().steps_used < 10u);
    }
    CHECK(knuth_prim(10u, 1u, 49u, small_digits).value == Natural::pow(Natural{10}, 49));
    CHECK(kind_of([&] { knuth_prim(10u, 1u, 50u, small_digits); }) == ErrorKind::MagnitudeExceeded);
}

TEST_CASE("huge closure towers terminate on the step budget") {
    const Budget b{100'000, 1000};
    CHECK(kind_of([&] { ack_prim(1'000'000u, 0u, b); }) == ErrorKind::BudgetExceeded);
    CHECK(kind_of([&] { ack_ref(1'000'000u, 0u, b); }) == ErrorKind::BudgetExceeded);
    CHECK(kind_of([&] { knuth_prim(2u, 1'000'000u, 3u, b); }) == ErrorKind::BudgetExceeded);
    CHECK(kind_of([&] { knuth_ref(2u, 30'000u, 3u, b); }) == ErrorKind::BudgetExceeded);
    CHECK(knuth_prim(2u, 1000u, 2u, Budget{}).value == Natural{4});
    CHECK(knuth_ref(2u, 1000u, 2u, Budget{}).value == Natural{4});
}

TEST_CASE("shared meter accumulates across calls") {
    Meter meter{Budget{}};
    const Natural x = ack_ref(2u, 2u, meter);
    const std::uint64_t after_first = meter.stats().steps_used;
    CHECK(x == Natural{7});
    CHECK(ack_ref(2u, 2u, meter) == Natural{7});
    CHECK(meter.stats().steps_used == 2 * after_first);
}
