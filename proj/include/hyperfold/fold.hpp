#pragma once

// Fold operators over naturals and finite sequences, and Church numerals.
//
//   foldn g e 0       = e
//   foldn g e n       = g (foldn g e (n - 1))
//   foldr g e []      = e
//   foldr g e (x:xs)  = g x (foldr g e xs)
//
// Both are evaluated iteratively so that n (or the sequence length) is not
// limited by the call stack.

#include <cstdint>
#include <iterator>
#include <memory>
#include <ranges>
#include <utility>

#include "hyperfold/natural.hpp"

namespace hyperfold::fold {

/// Applies `step` n times to `base`.
template <class T, class Step>
T foldn(Step&& step, T base, const Natural& n) {
    if (n.fits_u64()) {
        for (std::uint64_t i = n.to_u64(); i > 0; --i) base = step(std::move(base));
        return base;
    }
    for (Natural i = n; !i.is_zero(); --i) base = step(std::move(base));
    return base;
}

/// Right fold: step(x0, step(x1, ... step(x_{k-1}, base))). The input is
/// walked from its last element backwards and never modified.
template <std::ranges::bidirectional_range Range, class T, class Step>
T foldr_seq(Step&& step, T base, const Range& xs) {
    const auto first = std::ranges::begin(xs);
    for (auto it = std::ranges::end(xs); it != first;) {
        --it;
        base = step(*it, std::move(base));
    }
    return base;
}

inline constexpr std::uint64_t kDefaultChurchCap = 1'000'000;

/// A natural number represented by its own iterator.
///
/// A numeral is zero or a successor layer around an inner numeral; `apply`
/// for any carrier type T returns base for zero and wraps the inner
/// numeral's application in one more `step` for each successor layer.
/// Layers are shared, so `church_succ` is O(1) and values are immutable.
class ChurchNat {
public:
    template <class T, class Step>
    T apply(Step&& step, T base) const {
        std::uint64_t layers = 0;
        for (const Layer* l = top_.get(); l != nullptr; l = l->inner.get()) ++layers;
        for (; layers > 0; --layers) base = step(std::move(base));
        return base;
    }

    friend ChurchNat church_zero();
    friend ChurchNat church_succ(const ChurchNat& x);

private:
    struct Layer {
        std::shared_ptr<Layer> inner;
        explicit Layer(std::shared_ptr<Layer> in) : inner{std::move(in)} {}
        Layer(const Layer&) = delete;
        Layer& operator=(const Layer&) = delete;
        ~Layer();
    };

    explicit ChurchNat(std::shared_ptr<Layer> top) : top_{std::move(top)} {}

    std::shared_ptr<Layer> top_;
};

ChurchNat church_zero();
ChurchNat church_succ(const ChurchNat& x);

/// Builds a numeral of n successor layers by iterating church_succ.
/// Throws HyperError(ConstructionLimit) when n exceeds `cap`.
ChurchNat church_from_natural(const Natural& n, std::uint64_t cap = kDefaultChurchCap);

Natural church_to_natural(const ChurchNat& x);

/// foldn' g e n = n g e
template <class T, class Step>
T church_fold(Step&& step, T base, const ChurchNat& x) {
    return x.apply(std::forward<Step>(step), std::move(base));
}

} // namespace hyperfold::fold
