#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace kato {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Input rejected before any computation starts. `code()` is a short
/// machine-readable tag, `what()` the human sentence.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string code, const std::string& message)
        : std::invalid_argument(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// An identity that must hold by construction failed to hold.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Integer or half-integer, stored as twice its value.
class HalfInt {
public:
    HalfInt() = default;
    HalfInt(long value) : twice_(2 * BigInt(value)) {}  // NOLINT: implicit on purpose

    static HalfInt from_twice(BigInt twice) {
        HalfInt h;
        h.twice_ = std::move(twice);
        return h;
    }
    /// Accepts "k", "-k", "p/2", "-p/2".
    static HalfInt parse(std::string_view text);

    const BigInt& twice() const noexcept { return twice_; }
    bool is_integral() const { return !boost::multiprecision::bit_test(twice_, 0); }
    bool is_zero() const { return twice_ == 0; }
    int sign() const { return twice_.sign(); }

    Rational to_rational() const { return Rational(twice_, BigInt(2)); }
    double to_double() const { return twice_.convert_to<double>() / 2.0; }
    std::string to_string() const;

    HalfInt abs() const { return from_twice(boost::multiprecision::abs(twice_)); }
    HalfInt operator-() const { return from_twice(-twice_); }
    friend HalfInt operator+(const HalfInt& a, const HalfInt& b) { return from_twice(a.twice_ + b.twice_); }
    friend HalfInt operator-(const HalfInt& a, const HalfInt& b) { return from_twice(a.twice_ - b.twice_); }
    HalfInt& operator+=(const HalfInt& o) { twice_ += o.twice_; return *this; }
    HalfInt& operator-=(const HalfInt& o) { twice_ -= o.twice_; return *this; }

    friend bool operator==(const HalfInt& a, const HalfInt& b) { return a.twice_ == b.twice_; }
    friend std::strong_ordering operator<=>(const HalfInt& a, const HalfInt& b) {
        if (a.twice_ < b.twice_) return std::strong_ordering::less;
        if (a.twice_ > b.twice_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    BigInt twice_{0};
};

inline HalfInt half(long twice) { return HalfInt::from_twice(BigInt(twice)); }

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);
/// Inverse of to_string; rejects zero denominators and garbage.
Rational parse_rational(std::string_view text);
double to_double(const Rational& r);
Rational ipow(const Rational& base, unsigned exponent);

/// sigma_ell of the values; sigma_0 = 1 and sigma_ell = 0 once ell exceeds the count.
Rational elementary_symmetric(std::span<const Rational> values, std::size_t ell);
/// Sum of ell-th powers; ell = 0 gives the count.
Rational power_sum(std::span<const Rational> values, std::size_t ell);

}  // namespace kato
