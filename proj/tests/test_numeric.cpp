#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace kato;
using kt::R;
using kt::Rs;

TEST_CASE("elementary symmetric functions of (2, 0, -1)") {
    const auto v = Rs({"2", "0", "-1"});
    CHECK(elementary_symmetric(v, 0) == 1);
    CHECK(elementary_symmetric(v, 1) == 1);
    CHECK(elementary_symmetric(v, 2) == -2);
    CHECK(elementary_symmetric(v, 3) == 0);
    CHECK(elementary_symmetric(v, 4) == 0);
}

TEST_CASE("power sums") {
    const auto v = Rs({"5/2", "1/2", "-3/2"});
    CHECK(power_sum(v, 1) == R("3/2"));
    CHECK(power_sum(v, 3) == R("99/8"));
    CHECK(power_sum(v, 0) == 3);
    CHECK(power_sum(std::vector<Rational>{}, 2) == 0);
}

TEST_CASE("sigma agrees with subset enumeration and Newton identities") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4), len(0, 7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> v;
        const int size = len(rng);
        for (int i = 0; i < size; ++i) v.emplace_back(num(rng), den(rng));
        for (std::size_t ell = 0; ell <= v.size() + 1; ++ell) {
            REQUIRE(elementary_symmetric(v, ell) == kt::brute_sigma(v, ell));
        }
        // k sigma_k = sum_{i=1}^k (-1)^{i-1} sigma_{k-i} p_i
        for (std::size_t k = 1; k <= v.size(); ++k) {
            Rational rhs = 0;
            for (std::size_t i = 1; i <= k; ++i) {
                const Rational term = elementary_symmetric(v, k - i) * power_sum(v, i);
                rhs += (i % 2 == 1) ? term : -term;
            }
            REQUIRE(Rational(static_cast<long>(k)) * elementary_symmetric(v, k) == rhs);
        }
    }
}

TEST_CASE("rational text round trip") {
    for (const char* s : {"0", "1", "-1", "3/5", "-7/12", "123456789012345678901234567891/7"}) {
        CHECK(to_string(parse_rational(s)) == s);
    }
    CHECK(parse_rational("6/4") == R("3/2"));
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_rational("x"), ValidationError);
    CHECK_THROWS_AS(parse_rational(""), ValidationError);
}

TEST_CASE("half-integers") {
    CHECK(HalfInt::parse("3/2") == half(3));
    CHECK(HalfInt::parse("-2") == HalfInt(-2));
    CHECK(HalfInt::parse("4/2") == HalfInt(2));
    CHECK(half(3).to_string() == "3/2");
    CHECK(HalfInt(-4).to_string() == "-4");
    CHECK(half(5).is_integral() == false);
    CHECK(half(-6).is_integral());
    CHECK(half(-3).abs() == half(3));
    CHECK(half(1) < HalfInt(1));
    CHECK_THROWS_AS(HalfInt::parse("1/3"), ValidationError);
    CHECK_THROWS_AS(HalfInt::parse("0.5"), ValidationError);
    for (long t = -9; t <= 9; ++t) CHECK(HalfInt::parse(half(t).to_string()) == half(t));
}

TEST_CASE("integer powers") {
    CHECK(ipow(R("-3/2"), 0) == 1);
    CHECK(ipow(R("-3/2"), 3) == R("-27/8"));
    CHECK(to_double(R("1/4")) == doctest::Approx(0.25));
}
