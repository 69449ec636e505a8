#pragma once

#include <string>
#include <vector>

#include "kato/ellipticity.hpp"
#include "kato/numeric.hpp"

namespace kato {

/// One cell of the dimension 3 or 4 table of minimal elliptic operators.
struct TableRow {
    std::string op;
    std::string condition;
    int r = 0;
    int s = -1;  // -1 in dimension 3
    std::string weight;
    OperatorSubset I;
    Rational k_squared;  // computed by the engine
    bool sharp = true;
    Rational expected;   // tabulated closed form in r (and s)
    bool matches = false;
};

/// Representations Delta^r of so(3), lambda = (r/2), for r = 1..rmax.
std::vector<TableRow> dim3_table(int rmax);

/// Representations V^{r,s} of so(4), lambda = ((r+s)/2, (r-s)/2), for
/// 0 <= s <= r <= rmax. Includes rows checking the s=0 and r=s columns.
std::vector<TableRow> dim4_table(int rmax);

}  // namespace kato
