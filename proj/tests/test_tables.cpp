#include <doctest.h>

#include "kato/tables.hpp"
#include "support.hpp"

using namespace kato;
using kt::R;

namespace {

const TableRow* find(const std::vector<TableRow>& rows, const std::string& op, int r, int s = -1) {
    for (const auto& row : rows) {
        if (row.op == op && row.r == r && row.s == s) return &row;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("dimension 3 table") {
    const auto rows = dim3_table(8);
    for (const auto& row : rows) CHECK_MESSAGE(row.matches, row.op << " r=" << row.r);
    for (int r = 1; r <= 8; ++r) {
        const auto* tw = find(rows, "Twistor", r);
        REQUIRE(tw);
        CHECK(tw->k_squared == Rational(r, r + 2));
        if (r >= 2) {
            const auto* dt = find(rows, "Dirac-type", r);
            REQUIRE(dt);
            CHECK(dt->k_squared == Rational(r + 2, 2 * (r + 1)));
        }
    }
    REQUIRE(find(rows, "Dirac", 1));
    CHECK(find(rows, "Dirac", 1)->k_squared == R("2/3"));
    for (int r : {3, 5, 7}) {
        const auto* rs = find(rows, "R-S", r);
        REQUIRE(rs);
        CHECK(rs->k_squared == 1 - Rational(1, r * (r + 2)));
    }
}

TEST_CASE("dimension 4 table") {
    const auto rows = dim4_table(8);
    for (const auto& row : rows) CHECK_MESSAGE(row.matches, row.op << " r=" << row.r << " s=" << row.s);
    const auto* weyl = find(rows, "Spin (r+s)/2 field", 4, 0);
    REQUIRE(weyl);
    CHECK(weyl->k_squared == R("3/5"));
    CHECK(weyl->I == OperatorSubset{2});
    CHECK(weyl->weight == "(2,2)");
    std::size_t cells = 0;
    for (int r = 0; r <= 8; ++r) {
        for (int s = 0; s <= r; ++s) cells += find(rows, "Twistor", r, s) != nullptr;
    }
    CHECK(cells == 45);
}
