#include <cmath>
#include <string>

#include "hyperfold/hyperops.hpp"

namespace hyperfold {

namespace arith {

Natural succ(const Natural& x, Meter& meter) {
    meter.charge();
    Natural r = x;
    return meter.observe(++r);
}

Natural add(const Natural& x, const Natural& y, Meter& meter) {
    meter.charge();
    return meter.observe(x + y);
}

Natural mul(const Natural& x, const Natural& y, Meter& meter) {
    meter.charge();
    return meter.observe(x * y);
}

Natural pred(const Natural& x, Meter& meter) {
    if (x.is_zero()) meter.fail(ErrorKind::DomainError, "predecessor of zero");
    meter.charge();
    Natural r = x;
    return --r;
}

Natural power(const Natural& base, const Natural& exp, Meter& meter) {
    meter.charge();
    if (exp.is_zero()) return meter.observe(Natural{1});
    if (base <= Natural{1}) return meter.observe(base);

    const auto max_digits = static_cast<double>(meter.budget().max_digits);
    const double estimate = exp.fits_u64() ? static_cast<double>(exp.to_u64()) * base.log10() : HUGE_VAL;
    if (!exp.fits_u64() || estimate > max_digits + 1.0)
        meter.fail(ErrorKind::MagnitudeExceeded,
                   "magnitude limit exceeded: " + base.to_string() + "^" +
                       (exp.digits() > 40 ? std::string{"<" + std::to_string(exp.digits()) + " digits>"}
                                          : exp.to_string()) +
                       " would exceed max_digits=" + std::to_string(meter.budget().max_digits));

    const std::uint64_t e = exp.to_u64();
    int bit = 63;
    while (((e >> bit) & 1u) == 0) --bit;
    Natural result = base;
    for (--bit; bit >= 0; --bit) {
        result = mul(result, result, meter);
        if ((e >> bit) & 1u) result = mul(result, base, meter);
    }
    return result;
}

} // namespace arith

Natural cpow(const Natural& q, const Natural& p, Meter& meter) {
    return arith::power(p + Natural{1}, q + Natural{1}, meter);
}

Evaluation cpow(const Natural& q, const Natural& p, Budget budget) {
    Meter meter{budget};
    Natural v = cpow(q, p, meter);
    return {std::move(v), meter.stats()};
}

} // namespace hyperfold
