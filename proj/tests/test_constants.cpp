#include <doctest.h>

#include "kato/verify.hpp"
#include "support.hpp"

using namespace kato;
using kt::D;
using kt::R;

namespace {

std::string error_code(const std::function<void()>& body) {
    try {
        body();
    } catch (const ValidationError& e) {
        return e.code();
    }
    return "";
}

std::vector<OperatorSubset> all_subsets(int N) {
    std::vector<OperatorSubset> out;
    for (unsigned mask = 1; mask < (1u << N); ++mask) {
        OperatorSubset s;
        for (int j = 1; j <= N; ++j) {
            if (mask & (1u << (j - 1))) s.push_back(j);
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("vertices of the standard representation in dimension 4") {
    const auto d = D(4, "1,0");
    auto v = vertex(d, {3});
    CHECK(v.pi_values.at(1) == R("1/2"));
    CHECK(v.pi_values.at(2) == R("1/2"));
    CHECK(v.pi_values.at(3) == 0);
    v = vertex(d, {2});
    CHECK(v.pi_values.at(1) == R("3/4"));
    CHECK(v.pi_values.at(2) == 0);
    CHECK(v.pi_values.at(3) == R("1/4"));
    CHECK(v.Q == std::vector<Rational>{R("1/4")});
    CHECK_THROWS_AS(vertex(d, {1}), ValidationError);
    CHECK(vertex_degree(d) == 2);
}

TEST_CASE("vertex values sum to one and match the affine form") {
    for (const auto& w : weight_grid({3, 9, HalfInt(3)})) {
        const auto d = decompose(w);
        for (const auto& v : ne_vertices(d)) {
            Rational total = 0;
            for (const auto& [i, pi] : v.pi_values) {
                total += pi;
                REQUIRE(pi == pi_affine(d, i, v.Q));
            }
            REQUIRE(total == 1);
            for (int j : v.J) REQUIRE(v.pi_values.at(j) == 0);
        }
    }
}

TEST_CASE("Kato constants with known values") {
    for (int n = 3; n <= 12; ++n) CHECK(kato_constant(D(n, "1"), {1}).k_squared == R("1/2"));
    CHECK(kato_constant(D(4, "1,1"), {2}).k_squared == R("2/3"));
    CHECK(kato_constant(D(6, "1,1"), {2, 3}).k_squared == R("4/5"));
    const auto weyl = kato_constant(D(4, "2,2"), {2});
    CHECK(weyl.k_squared == R("3/5"));
    CHECK(weyl.sharp);
    CHECK(weyl.k_decimal == doctest::Approx(0.7745966692).epsilon(1e-10));
    CHECK(sqrt_rendering(weyl.k_squared) == "√(3/5)");
    CHECK(sqrt_rendering(R("1/4")) == "1/2");
    CHECK(decimal_rendering(0.5, 3) == "0.500");
}

TEST_CASE("degenerate sizes") {
    const auto trivial = kato_constant(D(5, "0,0"), {1});
    CHECK(trivial.k_squared == 0);
    CHECK(trivial.k_decimal == 0.0);

    // N = 2: w_1/(w_1 - w_2) for I = {1} and w_2/(w_2 - w_1) for I = {2}
    for (const char* text : {"1,1,1", "1/2,1/2,1/2", "2,2,2"}) {
        const auto d = D(6, text);
        REQUIRE(d.N == 2);
        const Rational w1 = d.w(1), w2 = d.w(2);
        CHECK(kato_constant(d, {1}).k_squared == w1 / (w1 - w2));
        CHECK(kato_constant(d, {2}).k_squared == w2 / (w2 - w1));
        CHECK(closed_form(d, {1}) == w1 / (w1 - w2));
    }
}

TEST_CASE("closed forms") {
    const auto n3 = D(4, "1,0");
    CHECK(closed_form(n3, {2, 3}) == -n3.w(3) / (n3.w(1) - n3.w(3)));
    CHECK(closed_form(D(4, "3,1"), {3}) == R("14/15"));
    CHECK(kato_constant(D(4, "3,1"), {3}).k_squared == R("14/15"));
    CHECK_FALSE(closed_form(n3, {2}).has_value());
}

TEST_CASE("sharpened half-integral constants in N = 3") {
    auto h = half_integral_n3_constants(D(3, "3/2"));
    CHECK(h.k2_of_2 == R("14/15"));
    h = half_integral_n3_constants(D(3, "5/2"));
    CHECK(h.k2_of_2 == R("34/35"));
    CHECK(error_code([] { half_integral_n3_constants(D(5, "1/2,1/2")); }) != "");

    // k^2 for {2,3} is (a^2-1)/(a(4k+n-1)) and for {1,2} it is
    // (4k^2-1)/(2k(4k+n-1)), a = 2k+n-1; checked on a sweep of k and n.
    for (int n : {3, 5, 7, 9}) {
        for (int twice_k = 3; twice_k <= 11; twice_k += 2) {
            std::string text = half(twice_k).to_string();
            for (int i = 1; i < n / 2; ++i) text += "," + half(twice_k).to_string();
            const auto d = D(n, text);
            REQUIRE(is_half_integral_n3(d));
            const Rational k(twice_k, 2);
            const Rational a = 2 * k + n - 1;
            const auto c = half_integral_n3_constants(d);
            CHECK(c.k2_of_2 == 1 - 1 / (2 * k * a));
            CHECK(c.k2_of_23 == (a * a - 1) / (a * (4 * k + n - 1)));
            CHECK(c.k2_of_12 == (4 * k * k - 1) / (2 * k * (4 * k + n - 1)));
            // sharpened values never exceed the vertex maximum, which is flagged non-sharp
            const auto main = kato_constant(d, {2});
            CHECK(c.k2_of_2 <= main.k_squared);
            CHECK_FALSE(main.sharp);
            CHECK(c.k2_of_12 <= kato_constant(d, {1, 2}).k_squared);
            CHECK(c.k2_of_23 <= kato_constant(d, {2, 3}).k_squared);
        }
    }
}

TEST_CASE("sharpened constants are the polytope maximum with Q_2 >= 1/4") {
    // For half-integral N = 3 the extra bound <Atilde_2 Phi, Phi> <= -1/4
    // cuts the segment of admissible Q_2 values.
    for (const auto& w : weight_grid({3, 9, half(9)})) {
        const auto d = decompose(w);
        if (!is_half_integral_n3(d)) continue;
        const auto rows = kt::pi_rows(d);
        auto pi = [&](int i, const Rational& q) { return rows[static_cast<std::size_t>(i - 1)][0] + rows[static_cast<std::size_t>(i - 1)][1] * q; };
        std::vector<Rational> candidates{Rational(1, 4)};
        for (int i = 1; i <= 3; ++i) candidates.push_back(-rows[static_cast<std::size_t>(i - 1)][0] / rows[static_cast<std::size_t>(i - 1)][1]);
        auto best = [&](const OperatorSubset& I) {
            std::optional<Rational> top;
            for (const auto& q : candidates) {
                if (q < Rational(1, 4) || pi(1, q) < 0 || pi(2, q) < 0 || pi(3, q) < 0) continue;
                Rational value = 0;
                for (int i = 1; i <= 3; ++i) {
                    if (!contains(I, i)) value += pi(i, q);
                }
                if (!top || value > *top) top = value;
            }
            REQUIRE(top.has_value());
            return *top;
        };
        const auto c = half_integral_n3_constants(d);
        INFO(w.to_string() << " n=" << w.dimension());
        CHECK(c.k2_of_2 == best({2}));
        CHECK(c.k2_of_23 == best({2, 3}));
        CHECK(c.k2_of_12 == best({1, 2}));
    }
}

TEST_CASE("one-sided weight constants") {
    auto c = p_plus_minus_constants(D(4, "1,0"));
    CHECK(c.k_plus == R("1/2"));
    CHECK(c.k_minus == R("3/4"));
    c = p_plus_minus_constants(D(3, "1"));
    CHECK(c.k_plus == R("1/2"));
    CHECK(c.k_minus == R("2/3"));
    CHECK(error_code([] { p_plus_minus_constants(D(4, "3,1")); }) == "zero_weight");
    CHECK(positive_weight_set(D(4, "1,0")) == OperatorSubset{1});
    CHECK(negative_weight_set(D(4, "1,0")) == OperatorSubset{2, 3});
}

TEST_CASE("bounds on the Q coordinates") {
    auto b = q_bounds(D(4, "1,0"));
    REQUIRE(b.size() == 1);
    CHECK(b[0].lower == R("1/4"));
    CHECK(b[0].upper == R("9/4"));
    b = q_bounds(D(4, "3,1"));
    REQUIRE(b.size() == 1);
    CHECK(b[0].lower == R("9/4"));
    CHECK(b[0].upper == R("49/4"));  // wtilde = (9/2, 3/2, -1/2, -7/2)
}

TEST_CASE("equality case is read off the extremal vertex") {
    for (const auto& w : weight_grid({3, 7, HalfInt(2)})) {
        const auto d = decompose(w);
        for (const auto& I : all_subsets(d.N)) {
            const auto k = kato_constant(d, I);
            REQUIRE(k.equality_case.vanishing_set == k.extremal_J);
            REQUIRE(k.equality_case.gradient_set ==
                    set_intersection(complement(I, d.N), complement(k.extremal_J, d.N)));
            REQUIRE(k.min_form == 1 - k.k_squared);
            REQUIRE(is_ne_set(d, k.extremal_J));
        }
    }
}

TEST_CASE("vertex maximum agrees with brute-force polytope optimization") {
    long compared = 0;
    for (const auto& w : weight_grid({3, 9, HalfInt(3)})) {
        const auto d = decompose(w);
        if (d.N > 7) continue;
        const auto vertices = ne_vertices(d);
        for (const auto& I : all_subsets(d.N)) {
            const auto k = kato_constant(d, I, vertices);
            const Rational lp = kt::lp_kato(d, I);
            INFO(w.to_string() << " n=" << w.dimension() << " I=" << to_string(I));
            if (k.sharp) {
                REQUIRE(k.k_squared == lp);
            } else {
                REQUIRE(lp <= k.k_squared);
            }
            REQUIRE(k.k_squared >= 0);
            REQUIRE(k.k_squared <= 1);
            ++compared;
        }
    }
    CHECK(compared > 1000);
}

TEST_CASE("monotone under enlarging I") {
    for (const auto& w : weight_grid({3, 8, HalfInt(2)})) {
        const auto d = decompose(w);
        const auto subsets = all_subsets(d.N);
        std::map<OperatorSubset, Rational> k;
        for (const auto& I : subsets) k[I] = kato_constant(d, I).k_squared;
        for (const auto& I : subsets) {
            for (const auto& J : subsets) {
                if (is_subset(I, J)) REQUIRE(k[J] <= k[I]);
            }
        }
    }
}
