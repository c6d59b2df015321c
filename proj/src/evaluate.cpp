#include <algorithm>
#include <optional>

#include "hyperfold/notation.hpp"

namespace hyperfold::notation {

const char* to_string(Form form) {
    switch (form) {
    case Form::Reference: return "reference";
    case Form::Primitive: return "primitive";
    case Form::Both: return "both";
    }
    return "?";
}

namespace {

class Evaluator {
public:
    Evaluator(Form form, Budget budget) {
        if (form != Form::Primitive) ref_.emplace(budget);
        if (form != Form::Reference) prim_.emplace(budget);
    }

    Natural eval(const Expr& e) {
        if (const auto* n = std::get_if<NatLit>(&e.node)) {
            if (ref_) ref_->observe(n->value);
            if (prim_) prim_->observe(n->value);
            return n->value;
        }
        if (const auto* a = std::get_if<Ack>(&e.node)) {
            const Natural m = eval(*a->m);
            const Natural n = eval(*a->n);
            return dispatch(
                "ack(" + m.to_string() + "," + n.to_string() + ")",
                [&](Meter& meter) { return ack_ref(m, n, meter); },
                [&](Meter& meter) { return ack_prim(m, n, meter); });
        }
        if (const auto* k = std::get_if<Knuth>(&e.node)) {
            const Natural a = eval(*k->a);
            const Natural level = eval(*k->level);
            const Natural b = eval(*k->b);
            return dispatch(
                "knuth(" + a.to_string() + "," + level.to_string() + "," + b.to_string() + ")",
                [&](Meter& meter) { return knuth_ref(a, level, b, meter); },
                [&](Meter& meter) { return knuth_prim(a, level, b, meter); });
        }
        const auto& items = std::holds_alternative<ChainE>(e.node) ? std::get<ChainE>(e.node).items
                                                                    : std::get<ConwayCall>(e.node).items;
        std::vector<Natural> entries;
        entries.reserve(items.size());
        for (const Expr& item : items) {
            entries.push_back(eval(item));
            if (entries.back().is_zero())
                throw HyperError(ErrorKind::DomainError, "chain item " + std::to_string(entries.size() - 1) +
                                                             " evaluates to 0; chain entries must be at least 1",
                                 stats());
        }
        const Chain c{std::move(entries)};
        return dispatch(
            "conway chain of length " + std::to_string(c.size()),
            [&](Meter& meter) { return conway_ref(c, meter); },
            [&](Meter& meter) { return conway_prim(c, meter); });
    }

    EvalStats stats() const {
        EvalStats s;
        for (const auto* m : {ref_ ? &*ref_ : nullptr, prim_ ? &*prim_ : nullptr}) {
            if (m == nullptr) continue;
            s.steps_used = std::max(s.steps_used, m->stats().steps_used);
            s.peak_digits = std::max(s.peak_digits, m->stats().peak_digits);
        }
        return s;
    }

private:
    template <class Ref, class Prim>
    Natural dispatch(const std::string& what, Ref&& ref, Prim&& prim) {
        std::optional<Natural> r;
        if (ref_) r = ref(*ref_);
        if (!prim_) return std::move(*r);
        Natural p = prim(*prim_);
        if (r && *r != p)
            throw MismatchError("reference and primitive forms disagree on " + what + ": reference " +
                                    r->to_string() + ", primitive " + p.to_string(),
                                stats());
        return p;
    }

    std::optional<Meter> ref_;
    std::optional<Meter> prim_;
};

} // namespace

Evaluation evaluate(const Expr& e, Form form, Budget budget) {
    Evaluator ev{form, budget};
    Natural v = ev.eval(e);
    return {std::move(v), ev.stats()};
}

} // namespace hyperfold::notation
