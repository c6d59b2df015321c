#include <array>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "hyperfold/cli.hpp"
#include "hyperfold/fold.hpp"
#include "hyperfold/hyperops.hpp"
#include "hyperfold/notation.hpp"

namespace hyperfold::cli {

namespace {

using notation::Form;

class Report {
public:
    Report(std::ostream& out, std::ostream& err) : out_{out}, err_{err} {}

    void group(const std::string& name) {
        flush();
        group_ = name;
    }

    void check(const std::string& name, const std::function<bool()>& body) {
        bool ok = false;
        std::string why;
        try {
            ok = body();
        } catch (const std::exception& e) {
            why = e.what();
        }
        ++group_total_;
        if (ok) {
            ++passed_;
            ++group_passed_;
            return;
        }
        ++failed_;
        err_ << "FAIL " << group_ << ": " << name;
        if (!why.empty()) err_ << " (" << why << ")";
        err_ << '\n';
    }

    int finish() {
        flush();
        out_ << "passed " << passed_ << ", failed " << failed_ << '\n';
        return failed_ == 0 ? exit_code::ok : exit_code::selftest_failed;
    }

private:
    void flush() {
        if (group_.empty()) return;
        out_ << (group_passed_ == group_total_ ? "ok   " : "FAIL ") << group_ << " (" << group_passed_ << "/"
             << group_total_ << ")\n";
        group_.clear();
        group_passed_ = group_total_ = 0;
    }

    std::ostream& out_;
    std::ostream& err_;
    std::string group_;
    int group_passed_ = 0, group_total_ = 0;
    int passed_ = 0, failed_ = 0;
};

bool budget_class(ErrorKind k) {
    return k == ErrorKind::BudgetExceeded || k == ErrorKind::MagnitudeExceeded;
}

Natural eval_text(const std::string& text, Form form, const Budget& budget) {
    return notation::evaluate(notation::parse(text), form, budget).value;
}

void quick_tables(Report& r, const Budget& b) {
    r.group("fold operators");
    const auto inc = [](Natural x) { return ++x; };
    const auto twice = [](Natural x) { return x * Natural{2}; };
    r.check("foldn(+1,0,0)", [&] { return fold::foldn(inc, Natural{0}, 0u) == Natural{0}; });
    r.check("foldn(+2,1,3)", [&] {
        return fold::foldn([](Natural x) { return x + Natural{2}; }, Natural{1}, 3u) == Natural{7};
    });
    r.check("foldn(double,1,10)", [&] { return fold::foldn(twice, Natural{1}, 10u) == Natural{1024}; });
    r.check("foldr_seq(add,0,[1,2,3])", [&] {
        const std::vector<int> xs{1, 2, 3};
        return fold::foldr_seq([](int x, int acc) { return x + acc; }, 0, xs) == 6;
    });
    r.check("foldr_seq(subtract,10,[1,2])", [&] {
        const std::vector<int> xs{1, 2};
        return fold::foldr_seq([](int x, int acc) { return x - acc; }, 10, xs) == 9;
    });
    r.check("church numerals", [&] {
        using namespace fold;
        return church_to_natural(church_zero()) == Natural{0} &&
               church_to_natural(church_succ(church_zero())) == Natural{1} &&
               church_succ(church_succ(church_zero())).apply([](std::string s) { return s + "I"; }, std::string{}) ==
                   "II" &&
               church_to_natural(church_from_natural(42u)) == Natural{42} &&
               church_fold([](Natural x) { return x + Natural{3}; }, Natural{1}, church_from_natural(4u)) ==
                   Natural{13};
    });

    r.group("defining equations");
    r.check("ack(0,5) = 6", [&] { return ack_ref(0u, 5u, b).value == Natural{6} && ack_prim(0u, 5u, b).value == Natural{6}; });
    r.check("ack_prim(0,9) = 10", [&] { return ack_prim(0u, 9u, b).value == Natural{10}; });
    r.check("knuth(2,0,3) = 6", [&] { return knuth_ref(2u, 0u, 3u, b).value == Natural{6} && knuth_prim(2u, 0u, 3u, b).value == Natural{6}; });
    r.check("knuth(5,3,0) = 1", [&] { return knuth_ref(5u, 3u, 0u, b).value == Natural{1} && knuth_prim(5u, 3u, 0u, b).value == Natural{1}; });
    r.check("knuth(7,4,0) = 1", [&] { return knuth_prim(7u, 4u, 0u, b).value == Natural{1}; });
    r.check("knuth(3,1,4) = 81", [&] { return knuth_ref(3u, 1u, 4u, b).value == Natural{81} && knuth_prim(3u, 1u, 4u, b).value == Natural{81}; });
    r.check("cpow", [&] {
        return cpow(0u, 0u, b).value == Natural{1} && cpow(2u, 1u, b).value == Natural{8} && cpow(1u, 2u, b).value == Natural{9};
    });
    r.check("conway <> = 1", [&] { return conway_ref(Chain{}, b).value == Natural{1} && conway_prim(Chain{}, b).value == Natural{1}; });
    r.check("conway <7> = 7", [&] { return conway_ref(Chain{7}, b).value == Natural{7} && conway_prim(Chain{7}, b).value == Natural{7}; });
    r.check("conway <2->3> = 8", [&] { return conway_ref(Chain{2, 3}, b).value == Natural{8} && conway_prim(Chain{2, 3}, b).value == Natural{8}; });
    r.check("conway <5->2> = 25", [&] { return conway_prim(Chain{5, 2}, b).value == Natural{25}; });
    r.check("cback ([],2,1) = 8 and ([],0,0) = 1", [&] {
        return cback_prim({}, 2u, 1u, b).value == Natural{8} && cback_prim({}, 0u, 0u, b).value == Natural{1};
    });

    r.group("notation");
    r.check("parse/render 3->3->2", [&] { return notation::render(notation::parse("3->3->2")) == "3->3->2"; });
    r.check("parse/render 2^^3", [&] { return notation::render(notation::parse("2^^3")) == "2^^3"; });
    r.check("render knuth(2,0,3)", [&] { return notation::render(notation::parse("knuth(2,0,3)")) == "knuth(2,0,3)"; });
    r.check("parse error 3->", [&] {
        try {
            notation::parse("3->");
        } catch (const notation::ParseError& e) {
            return e.pos().offset == 3;
        }
        return false;
    });
    r.check("eval 2->3 = 8", [&] { return eval_text("2->3", Form::Both, b) == Natural{8}; });
    r.check("eval conway() = 1", [&] { return eval_text("conway()", Form::Both, b) == Natural{1}; });
}

void full_tables(Report& r, const Budget& b) {
    r.group("derived values");
    const Natural big{7625597484987u};
    r.check("ack(2,3) = 9", [&] { return ack_ref(2u, 3u, b).value == Natural{9} && ack_prim(2u, 3u, b).value == Natural{9}; });
    r.check("ack(3,3) = 61", [&] { return ack_ref(3u, 3u, b).value == Natural{61} && ack_prim(3u, 3u, b).value == Natural{61}; });
    r.check("ack_prim(2,0) = ack_ref(1,1) = 3", [&] { return ack_prim(2u, 0u, b).value == Natural{3} && ack_ref(1u, 1u, b).value == Natural{3}; });
    r.check("knuth(2,2,3) = 16", [&] { return knuth_ref(2u, 2u, 3u, b).value == Natural{16} && knuth_prim(2u, 2u, 3u, b).value == Natural{16}; });
    r.check("knuth(3,2,3) = 7625597484987", [&] { return knuth_ref(3u, 2u, 3u, b).value == big && knuth_prim(3u, 2u, 3u, b).value == big; });
    r.check("conway <2->2->2> = 4", [&] { return conway_ref(Chain{2, 2, 2}, b).value == Natural{4} && conway_prim(Chain{2, 2, 2}, b).value == Natural{4}; });
    r.check("conway <3->3->2> = 7625597484987", [&] { return conway_ref(Chain{3, 3, 2}, b).value == big && conway_prim(Chain{3, 3, 2}, b).value == big; });
    r.check("conway <4->1->5> = 4", [&] { return conway_ref(Chain{4, 1, 5}, b).value == Natural{4} && conway_prim(Chain{4, 1, 5}, b).value == Natural{4}; });
    r.check("cback ([1],1,1) = 4", [&] {
        const std::vector<Natural> tail{Natural{1}};
        return cback_prim(tail, 1u, 1u, b).value == Natural{4};
    });
    r.check("eval 2^^4 = 65536", [&] { return eval_text("2^^4", Form::Both, b) == Natural{65536}; });
    r.check("eval ack(3,3) = 61", [&] { return eval_text("ack(3,3)", Form::Both, b) == Natural{61}; });

    r.group("ackermann agreement m<=3, n<=5");
    for (unsigned m = 0; m <= 3; ++m)
        for (unsigned n = 0; n <= 5; ++n)
            r.check("ack(" + std::to_string(m) + "," + std::to_string(n) + ")",
                    [&, m, n] { return ack_ref(m, n, b).value == ack_prim(m, n, b).value; });

    r.group("knuth agreement");
    std::vector<std::array<unsigned, 3>> grid;
    for (unsigned a = 0; a <= 3; ++a)
        for (unsigned n = 0; n <= 2; ++n)
            for (unsigned x = 0; x <= 3; ++x) grid.push_back({a, n, x});
    grid.push_back({2, 3, 2});
    grid.push_back({2, 2, 4});
    for (const auto& [a, n, x] : grid)
        r.check("knuth(" + std::to_string(a) + "," + std::to_string(n) + "," + std::to_string(x) + ")",
                [&, a = a, n = n, x = x] { return knuth_ref(a, n, x, b).value == knuth_prim(a, n, x, b).value; });

    r.group("conway agreement");
    std::vector<Chain> chains{Chain{}};
    for (unsigned x = 1; x <= 3; ++x) {
        chains.push_back(Chain{x});
        for (unsigned y = 1; y <= 3; ++y) {
            chains.push_back(Chain{x, y});
            for (unsigned z = 1; z <= 3; ++z) chains.push_back(Chain{x, y, z});
        }
    }
    chains.push_back(Chain{2, 2, 2, 2});
    chains.push_back(Chain{4, 1, 5});
    for (const Chain& c : chains) {
        std::string name = "<";
        for (std::size_t i = 0; i < c.size(); ++i) name += (i ? "->" : "") + c.entries()[i].to_string();
        name += ">";
        if (c == Chain{3, 3, 3}) {
            // 3->3->3 is far beyond any budget: both forms must give up
            r.check(name + " exhausts the budget in both forms", [&] {
                bool ref_failed = false, prim_failed = false;
                try { conway_ref(c, b); } catch (const HyperError& e) { ref_failed = budget_class(e.kind()); }
                try { conway_prim(c, b); } catch (const HyperError& e) { prim_failed = budget_class(e.kind()); }
                return ref_failed && prim_failed;
            });
            continue;
        }
        r.check(name, [&] { return conway_ref(c, b).value == conway_prim(c, b).value; });
    }

    r.group("fold recurrences on primitive forms");
    for (unsigned m = 1; m <= 3; ++m) {
        r.check("ack_prim(" + std::to_string(m) + ",0)", [&, m] { return ack_prim(m, 0u, b).value == ack_prim(m - 1, 1u, b).value; });
        for (unsigned n = 1; n <= 4; ++n)
            r.check("ack_prim(" + std::to_string(m) + "," + std::to_string(n) + ")", [&, m, n] {
                return ack_prim(m, n, b).value == ack_prim(m - 1, ack_prim(m, n - 1, b).value, b).value;
            });
    }
    for (unsigned a = 0; a <= 3; ++a)
        for (unsigned n = 1; n <= 2; ++n)
            for (unsigned x = 1; x <= 3; ++x)
                r.check("knuth_prim(" + std::to_string(a) + "," + std::to_string(n) + "," + std::to_string(x) + ")",
                        [&, a, n, x] {
                            return knuth_prim(a, n, x, b).value ==
                                   knuth_prim(a, n - 1, knuth_prim(a, n, x - 1, b).value, b).value;
                        });

    r.group("cross-hierarchy <a->b->c> = a ^c b");
    for (unsigned a = 2; a <= 3; ++a)
        for (unsigned x = 1; x <= 3; ++x)
            for (unsigned c = 1; c <= 2; ++c)
                r.check(std::to_string(a) + "->" + std::to_string(x) + "->" + std::to_string(c),
                        [&, a, x, c] { return conway_ref(Chain{a, x, c}, b).value == knuth_ref(a, c, x, b).value; });

    r.group("ack(m+2,n) = knuth(2,m,n+3) - 3");
    std::vector<std::pair<unsigned, unsigned>> outlook;
    for (unsigned m = 0; m <= 1; ++m)
        for (unsigned n = 0; n <= 5; ++n) outlook.emplace_back(m, n);
    outlook.emplace_back(2, 0);
    outlook.emplace_back(2, 1);
    for (const auto& [m, n] : outlook)
        r.check("m=" + std::to_string(m) + " n=" + std::to_string(n), [&, m = m, n = n] {
            return ack_prim(m + 2, n, b).value + Natural{3} == knuth_ref(2u, m, n + 3, b).value;
        });

    r.group("church fold = foldn . toInteger");
    const std::vector<std::function<Natural(Natural)>> steps{
        [](Natural x) { return ++x; }, [](Natural x) { return x + Natural{5}; },
        [](Natural x) { return x * Natural{2}; }, [](Natural x) { return x * Natural{3}; }};
    for (std::size_t g = 0; g < steps.size(); ++g)
        for (unsigned e : {0u, 1u, 5u})
            for (unsigned n : {0u, 1u, 7u, 64u, 200u, 500u})
                r.check("g" + std::to_string(g) + " e=" + std::to_string(e) + " n=" + std::to_string(n),
                        [&, g, e, n] {
                            return fold::church_fold(steps[g], Natural{e}, fold::church_from_natural(n)) ==
                                   fold::foldn(steps[g], Natural{e}, n);
                        });
}

} // namespace

int run_selftest(SelftestLevel level, const Config& config, std::ostream& out, std::ostream& err) {
    Report report{out, err};
    const Budget budget = config.budget();
    quick_tables(report, budget);
    if (level == SelftestLevel::Full) full_tables(report, budget);
    return report.finish();
}

} // namespace hyperfold::cli
