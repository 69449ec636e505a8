#include "kato/tables.hpp"

#include <algorithm>

#include "kato/constants.hpp"
#include "kato/decomposition.hpp"

namespace kato {
namespace {

// Components whose targets include one of the listed virtual weights.
OperatorSubset components_with_targets(const Decomposition& d,
                                       const std::vector<std::pair<VirtualWeight::Kind, int>>& wanted) {
    OperatorSubset out;
    for (const auto& c : d.components) {
        for (const auto& t : c.targets) {
            const bool hit = std::any_of(wanted.begin(), wanted.end(),
                                         [&](const auto& w) { return t.kind == w.first && t.index == w.second; });
            if (hit) {
                out.push_back(c.j);
                break;
            }
        }
    }
    return out;
}

TableRow make_row(std::string op, std::string condition, int r, int s, const Decomposition& d, OperatorSubset I,
                  Rational expected) {
    TableRow row;
    row.op = std::move(op);
    row.condition = std::move(condition);
    row.r = r;
    row.s = s;
    row.weight = d.lambda.to_string();
    const KatoResult k = kato_constant(d, I);
    row.I = std::move(I);
    row.k_squared = k.k_squared;
    row.sharp = k.sharp;
    row.expected = std::move(expected);
    row.matches = row.k_squared == row.expected;
    return row;
}

}  // namespace

std::vector<TableRow> dim3_table(int rmax) {
    std::vector<TableRow> rows;
    for (int r = 1; r <= rmax; ++r) {
        const Decomposition d = decompose(DominantWeight::validate(3, {half(r)}));
        const Rational R(r);
        rows.push_back(make_row("Twistor", "all r", r, -1, d, {1}, R / (R + 2)));
        if (r == 1) rows.push_back(make_row("Dirac", "r=1", r, -1, d, {2}, Rational(2, 3)));
        if (r >= 2) rows.push_back(make_row("Dirac-type", "r>=2", r, -1, d, {2, 3}, (R + 2) / (2 * (R + 1))));
        if (r >= 3 && r % 2 == 1) {
            // The vertex bound is not sharp here; the tabulated value is the
            // sharpened one.
            TableRow row;
            row.op = "R-S";
            row.condition = "r>=3 odd";
            row.r = r;
            row.weight = d.lambda.to_string();
            row.I = {2};
            row.k_squared = half_integral_n3_constants(d).k2_of_2;
            row.sharp = true;
            row.expected = 1 - 1 / (R * (R + 2));
            row.matches = row.k_squared == row.expected;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<TableRow> dim4_table(int rmax) {
    using Kind = VirtualWeight::Kind;
    std::vector<TableRow> rows;
    for (int r = 0; r <= rmax; ++r) {
        for (int s = 0; s <= r; ++s) {
            const Decomposition d = decompose(DominantWeight::validate(4, {half(r + s), half(r - s)}));
            const Rational R(r), S(s);
            const Rational denom = 2 * (R + 1) * (S + 1);

            rows.push_back(make_row("Twistor", "r>=s>=0", r, s, d, {1}, (2 * R * S + R + S) / denom));
            if (s == 0) rows.push_back(make_row("Twistor", "s=0 column", r, s, d, {1}, R / (2 * (R + 1))));
            if (r == s) rows.push_back(make_row("Twistor", "r=s column", r, s, d, {1}, S / (S + 1)));

            if (r > s) {
                const OperatorSubset I = components_with_targets(d, {{Kind::minus, 2}});
                rows.push_back(
                    make_row("Spin (r+s)/2 field", "r>s>=0", r, s, d, I, (2 * R * S + R + 3 * S + 2) / denom));
                if (s == 0) {
                    rows.push_back(make_row("Spin (r+s)/2 field", "s=0 column", r, s, d, I, (R + 2) / (2 * (R + 1))));
                }
            }
            if (s > 0) {
                const OperatorSubset I =
                    r == s ? components_with_targets(d, {{Kind::plus, 2}, {Kind::minus, 2}, {Kind::minus, 1}})
                           : components_with_targets(d, {{Kind::plus, 2}, {Kind::minus, 1}});
                rows.push_back(make_row("Dirac-type", "r>=s>0", r, s, d, I, (S + 2) / (2 * (S + 1))));
                if (r == s) rows.push_back(make_row("Dirac-type", "r=s column", r, s, d, I, (S + 2) / (2 * (S + 1))));
            }
        }
    }
    return rows;
}

}  // namespace kato
