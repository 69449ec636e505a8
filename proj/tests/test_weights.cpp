#include <doctest.h>

#include "support.hpp"

using namespace kato;
using kt::W;

namespace {

std::string error_code(int n, const std::string& text) {
    try {
        parse_weight(n, text);
    } catch (const ValidationError& e) {
        return e.code();
    }
    return "";
}

std::vector<int> prefix(const WeightProfile& p) { return p.block_prefix_counts; }

}  // namespace

TEST_CASE("validation accepts and rejects") {
    const auto l1 = W(4, "1,0");
    CHECK(l1.rank() == 2);
    CHECK_FALSE(l1.is_properly_half_integral());
    const auto spin = W(5, "1/2,1/2");
    CHECK(spin.is_properly_half_integral());
    CHECK(is_properly_half_integral(spin));
    CHECK(W(3, "3/2").is_properly_half_integral());

    CHECK(error_code(4, "0,1") == "dominance");
    CHECK(error_code(5, "1,-1") == "dominance");
    CHECK(error_code(5, "1,1/2") == "mixed_integrality");
    CHECK(error_code(4, "1,0,0") == "entry_count");
    CHECK(error_code(2, "1") == "dimension");
    CHECK(error_code(5, "1/2") == "entry_count");
    CHECK(error_code(6, "2,a") == "bad_number");
}

TEST_CASE("profiles") {
    auto p = profile(W(4, "1,0"));
    CHECK(p.nu == 2);
    CHECK(p.block_values == std::vector<HalfInt>{1, 0});
    CHECK(prefix(p) == std::vector<int>{1, 2});

    p = profile(W(5, "1/2,1/2"));
    CHECK(p.nu == 1);
    CHECK(p.block_values == std::vector<HalfInt>{half(1)});
    CHECK(prefix(p) == std::vector<int>{2});

    p = profile(W(7, "2,2,1"));
    CHECK(p.nu == 2);
    CHECK(p.block_values == std::vector<HalfInt>{2, 1});
    CHECK(prefix(p) == std::vector<int>{2, 3});

    p = profile(W(6, "0,0,0"));
    CHECK(p.nu == 1);
    CHECK(p.block_values == std::vector<HalfInt>{0});
    CHECK(prefix(p) == std::vector<int>{3});

    p = profile(W(9, "3,3,1,0"));
    CHECK(p.nu == 3);
    CHECK(p.block_values == std::vector<HalfInt>{3, 1, 0});
    CHECK(prefix(p) == std::vector<int>{2, 3, 4});
}

TEST_CASE("profile reconstructs the weight") {
    for (int n = 3; n <= 10; ++n) {
        for (const auto& w : enumerate_weights(n, HalfInt(3))) {
            REQUIRE(profile(w).reconstruct() == w.entries());
        }
    }
}

TEST_CASE("parsing pads integral weights and keeps chirality") {
    CHECK(W(6, "1") == W(6, "1,0,0"));
    CHECK(W(8, "2,1").entries() == std::vector<HalfInt>{2, 1, 0, 0});
    const auto minus = W(4, "2,-2");
    CHECK(minus.chirality() == -1);
    CHECK(minus.entries() == std::vector<HalfInt>{2, 2});
    CHECK(minus.signed_entries() == std::vector<HalfInt>{2, -2});
    CHECK(minus.to_string() == "(2,-2)");
    CHECK(W(4, "2,2").chirality() == 1);
    CHECK(W(5, "3/2,1/2").to_string() == "(3/2,1/2)");
    CHECK(W(4, " 1, 0").to_string() == "(1,0)");
}

TEST_CASE("text round trip") {
    for (int n = 3; n <= 8; ++n) {
        for (const auto& w : enumerate_weights(n, half(5))) {
            std::string s = w.to_string();
            s = s.substr(1, s.size() - 2);
            REQUIRE(parse_weight(n, s) == w);
        }
    }
}

TEST_CASE("dominance on D_m allows a signed last entry") {
    std::vector<HalfInt> a{2, -1};
    std::vector<HalfInt> b{1, -2};
    CHECK(is_dominant(4, a));
    CHECK_FALSE(is_dominant(4, b));
    CHECK_FALSE(is_dominant(5, a));
}

TEST_CASE("enumeration matches brute force") {
    for (int n = 3; n <= 9; ++n) {
        const int m = n / 2;
        std::size_t expected = 0;
        // every tuple of twice-values in [0, 6] of a single parity
        for (int parity = 0; parity <= 1; ++parity) {
            std::vector<int> t(static_cast<std::size_t>(m), parity);
            while (true) {
                bool ok = true;
                for (int i = 0; i + 1 < m; ++i) ok = ok && t[i] >= t[i + 1];
                expected += ok;
                int pos = m - 1;
                while (pos >= 0 && t[pos] + 2 > 6) t[pos--] = parity;
                if (pos < 0) break;
                t[pos] += 2;
            }
        }
        CHECK(enumerate_weights(n, HalfInt(3)).size() == expected);
        for (const auto& w : enumerate_weights(n, HalfInt(3), false)) CHECK_FALSE(w.is_properly_half_integral());
    }
}
