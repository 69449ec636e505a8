#include "kato/numeric.hpp"

#include <cctype>
#include <vector>

namespace kato {
namespace {

bool parse_integer(std::string_view text, BigInt& out) {
    if (text.empty()) return false;
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) return false;
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    out = BigInt(digits);
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    BigInt num;
    if (slash == std::string_view::npos) {
        if (!parse_integer(text, num)) {
            throw ValidationError("bad_number", "cannot parse '" + std::string(text) + "' as an integer or half-integer");
        }
        return from_twice(2 * num);
    }
    BigInt den;
    if (!parse_integer(trim(text.substr(0, slash)), num) || !parse_integer(trim(text.substr(slash + 1)), den) ||
        den == 0) {
        throw ValidationError("bad_number", "cannot parse '" + std::string(text) + "' as a half-integer");
    }
    // Anything of the form a/b with 2a/b integral is accepted, so "4/2" is 2.
    BigInt twice_num = 2 * num;
    if (twice_num % den != 0) {
        throw ValidationError("bad_number", "'" + std::string(text) + "' is neither an integer nor a half-integer");
    }
    return from_twice(twice_num / den);
}

std::string HalfInt::to_string() const {
    if (is_integral()) return BigInt(twice_ / 2).str();
    return twice_.str() + "/2";
}

std::string to_string(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    BigInt num;
    if (slash == std::string_view::npos) {
        if (!parse_integer(text, num)) {
            throw ValidationError("bad_number", "cannot parse '" + std::string(text) + "' as a rational");
        }
        return Rational(num);
    }
    BigInt den;
    if (!parse_integer(trim(text.substr(0, slash)), num) || !parse_integer(trim(text.substr(slash + 1)), den) ||
        den == 0) {
        throw ValidationError("bad_number", "cannot parse '" + std::string(text) + "' as a rational");
    }
    return Rational(num, den);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational ipow(const Rational& base, unsigned exponent) {
    Rational result(1);
    Rational b = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent != 0) b *= b;
    }
    return result;
}

Rational elementary_symmetric(std::span<const Rational> values, std::size_t ell) {
    if (ell > values.size()) return Rational(0);
    // e[k] holds sigma_k of the prefix processed so far.
    std::vector<Rational> e(ell + 1, Rational(0));
    e[0] = 1;
    for (const auto& v : values) {
        for (std::size_t k = ell; k >= 1; --k) e[k] += v * e[k - 1];
    }
    return e[ell];
}

Rational power_sum(std::span<const Rational> values, std::size_t ell) {
    Rational total(0);
    for (const auto& v : values) total += ipow(v, static_cast<unsigned>(ell));
    return total;
}

}  // namespace kato
