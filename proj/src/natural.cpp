#include "hyperfold/natural.hpp"

#include <cmath>
#include <limits>
#include <ostream>

namespace hyperfold {

std::optional<Natural> Natural::from_decimal(std::string_view digits) {
    if (digits.empty()) return std::nullopt;
    for (char c : digits)
        if (c < '0' || c > '9') return std::nullopt;
    mpz_class v;
    if (v.set_str(std::string{digits}, 10) != 0) return std::nullopt;
    return Natural{std::move(v)};
}

std::string Natural::to_string() const { return v_.get_str(10); }

std::size_t Natural::digits_upper_bound() const { return mpz_sizeinbase(v_.get_mpz_t(), 10); }

std::size_t Natural::digits() const {
    const std::size_t estimate = digits_upper_bound();
    if (estimate <= 1) return 1;
    if (fits_u64()) {
        std::uint64_t x = to_u64();
        std::size_t d = 1;
        while (x >= 10) {
            x /= 10;
            ++d;
        }
        return d;
    }
    // sizeinbase may overshoot by one: the value has estimate-1 digits iff it is below 10^(estimate-1)
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 10, estimate - 1);
    return cmp(v_, bound) < 0 ? estimate - 1 : estimate;
}

std::size_t Natural::bit_length() const { return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2); }

double Natural::log10() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    long exp2 = 0;
    const double mantissa = mpz_get_d_2exp(&exp2, v_.get_mpz_t());
    return std::log10(mantissa) + static_cast<double>(exp2) * std::log10(2.0);
}

bool Natural::fits_u64() const {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return mpz_fits_ulong_p(v_.get_mpz_t()) != 0;
}

std::uint64_t Natural::to_u64() const { return mpz_get_ui(v_.get_mpz_t()); }

Natural& Natural::operator-=(const Natural& rhs) {
    if (cmp(v_, rhs.v_) < 0) throw std::domain_error("Natural: subtraction below zero");
    v_ -= rhs.v_;
    return *this;
}

Natural& Natural::operator--() {
    if (is_zero()) throw std::domain_error("Natural: predecessor of zero");
    v_ -= 1u;
    return *this;
}

Natural Natural::pow(const Natural& base, std::uint64_t exp) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.v_.get_mpz_t(), exp);
    return Natural{std::move(r)};
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.to_string(); }

} // namespace hyperfold
