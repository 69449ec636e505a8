#include <doctest.h>

#include "kato/casimir.hpp"
#include "kato/verify.hpp"
#include "support.hpp"

using namespace kato;
using kt::D;
using kt::R;
using kt::W;

namespace {

BigInt binomial(int n, int k) {
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BigInt dim_of(int n, const std::string& text) { return weyl_dimension(W(n, text)); }

}  // namespace

TEST_CASE("Casimir numbers") {
    CHECK(casimir_number(W(5, "1,0")) == 4);
    CHECK(casimir_number(W(4, "1,0")) == 3);
    for (int n = 3; n <= 10; ++n) {
        CHECK(casimir_number(W(n, "0")) == 0);
        CHECK(casimir_number(W(n, "1")) == n - 1);
    }
    for (const auto& w : weight_grid({3, 9, HalfInt(3)})) {
        REQUIRE(casimir_number(w) == kt::casimir_ref(w.dimension(), w.entries()));
    }
}

TEST_CASE("conformal weights from Casimirs") {
    const auto lambda = W(4, "1,0");
    const std::vector<HalfInt> up{2, 0}, down{0, 0};
    CHECK(conformal_weight(up, lambda) == 1);
    CHECK(conformal_weight(down, lambda) == -3);
    for (int n : {3, 5, 7, 9}) {
        for (const auto& w : enumerate_weights(n, HalfInt(2))) {
            CHECK(conformal_weight(w.entries(), w) == Rational(1 - n, 2));
        }
    }
}

TEST_CASE("Weyl dimensions against closed forms") {
    CHECK(dim_of(4, "1,0") == 4);
    CHECK(dim_of(3, "2") == 5);
    CHECK(dim_of(5, "1/2,1/2") == 4);
    for (int n = 3; n <= 12; ++n) {
        const int m = n / 2;
        CHECK(dim_of(n, "2") == n * (n + 1) / 2 - 1);
        for (int p = 1; p < m; ++p) {
            std::string text;
            for (int i = 0; i < p; ++i) text += i ? ",1" : "1";
            CHECK(dim_of(n, text) == binomial(n, p));
        }
        std::string spin;
        for (int i = 0; i < m; ++i) spin += i ? ",1/2" : "1/2";
        CHECK(dim_of(n, spin) == (BigInt(1) << (n % 2 == 1 ? m : m - 1)));
    }
    for (int r = 0; r <= 8; ++r) CHECK(weyl_dimension(W(3, half(r).to_string())) == r + 1);
    for (int r = 0; r <= 6; ++r) {
        for (int s = 0; s <= r; ++s) {
            const std::string text = half(r + s).to_string() + "," + half(r - s).to_string();
            CHECK(weyl_dimension(W(4, text)) == (r + 1) * (s + 1));
        }
    }
    const std::vector<HalfInt> bad{0, 1};
    CHECK_THROWS_AS(weyl_dimension(4, bad), ValidationError);
}

TEST_CASE("relative dimensions") {
    const auto d3 = D(3, "1");
    CHECK(relative_dimension(d3, 1) == R("5/3"));
    CHECK(relative_dimension(d3, 3) == R("1/3"));
    CHECK(relative_dimension(D(4, "1,0"), 2) == R("3/2"));
    for (const auto& w : weight_grid({3, 10, HalfInt(3)})) {
        const auto d = decompose(w);
        Rational total = 0;
        for (int j = 1; j <= d.N; ++j) {
            const Rational r = relative_dimension(d, j);
            REQUIRE(r == Rational(d.component(j).dim, d.dim_V()));
            total += r;
        }
        REQUIRE(total == w.dimension());
    }
}

TEST_CASE("power sums p_ell") {
    CHECK(p_ell(W(4, "1,0"), 1) == 2);
    for (int n = 3; n <= 8; ++n) {
        CHECK(p_ell(W(n, "0"), 3) == p_ell_baseline(n, 3));
        CHECK(p_ell(W(n, "1"), 0) == 2 * (n / 2));
    }
}

TEST_CASE("partial traces of powers of Btilde") {
    for (const auto& w : weight_grid({3, 9, half(5)})) {
        const auto d = decompose(w);
        const auto series = ptr_btilde_series(d, 9);
        REQUIRE(series.size() == 10);
        REQUIRE(series[0] == w.dimension());
        for (unsigned ell = 0; ell <= 9; ++ell) {
            Rational spectral = 0;
            for (int j = 1; j <= d.N; ++j) {
                spectral += ipow(d.w_tilde(j), ell) * Rational(d.component(j).dim, d.dim_V());
            }
            REQUIRE(series[ell] == spectral);
        }
        // Atilde_j = sum_i (-1)^i sigma_i Btilde^{j-i}
        const auto wt = d.translated_weights();
        for (unsigned j = 0; j <= 8; ++j) {
            Rational expected = 0;
            for (unsigned i = 0; i <= j; ++i) {
                const Rational term = kt::brute_sigma(wt, i) * series[j - i];
                expected += i % 2 == 0 ? term : -term;
            }
            REQUIRE(ptr_atilde(d, j) == expected);
        }
    }
    const auto d = D(3, "1");
    CHECK(ptr_atilde(d, 0) == 3);
    // odd j with N odd: both terms of the closed form vanish
    CHECK(ptr_atilde(d, 1) == 0);
    const auto even = D(4, "3,1");
    CHECK(ptr_atilde(even, 1) == ptr_atilde_from_series(even, 1));
    CHECK(ptr_atilde(even, 1) == ptr_atilde_closed_form(even, 1));
}

TEST_CASE("cubic Casimir identity for the standard representation") {
    const auto d = D(4, "1,0");
    CHECK(power_sum(d.translated_weights(), 3) - R("27/8") == 3 * casimir_number(W(4, "1,0")));
    CHECK(power_sum(d.translated_weights(), 1) == R("3/2"));
}
