#include "hyperfold/fold.hpp"

#include <string>

#include "hyperfold/budget.hpp"

namespace hyperfold::fold {

// Unlinks uniquely owned inner layers one at a time so that dropping a deep
// numeral does not recurse once per layer.
ChurchNat::Layer::~Layer() {
    std::shared_ptr<Layer> next = std::move(inner);
    while (next && next.use_count() == 1) {
        std::shared_ptr<Layer> after = std::move(next->inner);
        next = std::move(after);
    }
}

ChurchNat church_zero() { return ChurchNat{nullptr}; }

ChurchNat church_succ(const ChurchNat& x) { return ChurchNat{std::make_shared<ChurchNat::Layer>(x.top_)}; }

ChurchNat church_from_natural(const Natural& n, std::uint64_t cap) {
    if (n > Natural{cap})
        throw HyperError(ErrorKind::ConstructionLimit,
                         "Church numeral of " + n.to_string() + " layers exceeds the cap of " + std::to_string(cap));
    return foldn([](const ChurchNat& x) { return church_succ(x); }, church_zero(), n);
}

Natural church_to_natural(const ChurchNat& x) {
    return x.apply([](Natural v) { return ++v; }, Natural{});
}

} // namespace hyperfold::fold
