#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hyperfold {

/// Arbitrary-precision non-negative integer.
///
/// Every operation that could leave the naturals (subtracting a larger
/// value) throws std::domain_error instead of wrapping or going negative.
class Natural {
public:
    Natural() = default;

    template <std::unsigned_integral T>
    Natural(T v) : v_{static_cast<unsigned long>(v)} {} // NOLINT(google-explicit-constructor)

    template <std::signed_integral T>
    Natural(T v) { // NOLINT(google-explicit-constructor)
        if (v < 0) throw std::domain_error("Natural: negative value");
        v_ = static_cast<unsigned long>(v);
    }

    /// Parses a run of decimal digits (no sign, no whitespace).
    static std::optional<Natural> from_decimal(std::string_view digits);

    std::string to_string() const;

    /// Exact count of decimal digits; zero has one digit.
    std::size_t digits() const;
    /// Cheap estimate that is either exact or one too large.
    std::size_t digits_upper_bound() const;
    std::size_t bit_length() const;
    /// log10 of the value, or -inf for zero.
    double log10() const;

    bool is_zero() const { return sgn(v_) == 0; }
    bool fits_u64() const;
    std::uint64_t to_u64() const; // precondition: fits_u64()

    Natural& operator+=(const Natural& rhs) { v_ += rhs.v_; return *this; }
    Natural& operator*=(const Natural& rhs) { v_ *= rhs.v_; return *this; }
    Natural& operator-=(const Natural& rhs);
    Natural& operator++() { v_ += 1u; return *this; }
    Natural& operator--();

    friend Natural operator+(Natural a, const Natural& b) { return a += b; }
    friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
    friend Natural operator-(Natural a, const Natural& b) { return a -= b; }

    friend bool operator==(const Natural& a, const Natural& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// base^exp by the library's exponentiation; no budget accounting.
    static Natural pow(const Natural& base, std::uint64_t exp);

    const mpz_class& raw() const { return v_; }

private:
    explicit Natural(mpz_class v) : v_{std::move(v)} {}

    mpz_class v_;
};

std::ostream& operator<<(std::ostream& os, const Natural& n);

} // namespace hyperfold
