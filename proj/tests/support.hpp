#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "kato/constants.hpp"
#include "kato/decomposition.hpp"
#include "kato/ellipticity.hpp"
#include "kato/numeric.hpp"
#include "kato/weights.hpp"

namespace kt {

using kato::Decomposition;
using kato::HalfInt;
using kato::OperatorSubset;
using kato::Rational;

inline Rational R(const std::string& text) { return kato::parse_rational(text); }
inline kato::DominantWeight W(int n, const std::string& text) { return kato::parse_weight(n, text); }
inline Decomposition D(int n, const std::string& text) { return kato::decompose(W(n, text)); }

inline std::vector<Rational> Rs(std::initializer_list<const char*> items) {
    std::vector<Rational> out;
    for (const char* s : items) out.push_back(R(s));
    return out;
}

// sigma_ell by summing over all ell-subsets.
inline Rational brute_sigma(const std::vector<Rational>& values, std::size_t ell) {
    const std::size_t n = values.size();
    if (ell > n) return Rational(0);
    Rational total = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != ell) continue;
        Rational prod = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) prod *= values[i];
        }
        total += prod;
    }
    return total;
}

// <mu + delta, mu + delta> - <delta, delta> with delta_i = n/2 - i.
inline Rational casimir_ref(int n, const std::vector<HalfInt>& mu) {
    Rational c = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        const Rational delta = Rational(n, 2) - Rational(static_cast<long>(i + 1));
        const Rational x = mu[i].to_rational();
        c += (x + delta) * (x + delta) - delta * delta;
    }
    return c;
}

inline Rational conformal_weight_ref(int n, const std::vector<HalfInt>& target, const kato::DominantWeight& lambda) {
    return (casimir_ref(n, target) - casimir_ref(n, lambda.entries()) - Rational(n - 1)) / 2;
}

// Solves A x = b over the rationals; nullopt when A is singular.
inline std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
    const std::size_t m = b.size();
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        while (piv < m && A[piv][col] == 0) ++piv;
        if (piv == m) return std::nullopt;
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col || A[r][col] == 0) continue;
            const Rational f = A[r][col] / A[col][col];
            for (std::size_t c = col; c < m; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t r = 0; r < m; ++r) b[r] /= A[r][r];
    return b;
}

// Projection norms pi_i as affine functions of (Q_2..Q_M): row i holds the
// constant term followed by the Q coefficients.
inline std::vector<std::vector<Rational>> pi_rows(const Decomposition& d) {
    const int N = d.N;
    const int M = (N + 1) / 2;
    std::vector<std::vector<Rational>> rows;
    for (int i = 1; i <= N; ++i) {
        const Rational wi = d.w_tilde(i);
        Rational denom = 1;
        for (int k = 1; k <= N; ++k) {
            if (k != i) denom *= wi - d.w_tilde(k);
        }
        const Rational pref = N % 2 == 0 ? wi - Rational(1, 2) : Rational(1);
        std::vector<Rational> row;
        for (int k = 1; k <= M; ++k) {
            Rational c = pref * kato::ipow(wi, static_cast<unsigned>(2 * (M - k))) / denom;
            if (k % 2 == 0) c = -c;
            row.push_back(c);
        }
        rows.push_back(row);
    }
    return rows;
}

// Maximum of sum_{i not in I} pi_i over the polytope {pi >= 0}, by brute
// force over every intersection of M-1 facets.
inline Rational lp_kato(const Decomposition& d, const OperatorSubset& I) {
    const int N = d.N;
    const int dim = (N + 1) / 2 - 1;
    const auto rows = pi_rows(d);
    auto evaluate = [&](const std::vector<Rational>& Q, Rational& objective) {
        objective = 0;
        for (int i = 1; i <= N; ++i) {
            Rational v = rows[static_cast<std::size_t>(i - 1)][0];
            for (int k = 0; k < dim; ++k) v += rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k + 1)] * Q[static_cast<std::size_t>(k)];
            if (v < 0) return false;
            if (!kato::contains(I, i)) objective += v;
        }
        return true;
    };
    std::optional<Rational> best;
    std::vector<int> pick(static_cast<std::size_t>(dim));
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == dim) {
            std::vector<std::vector<Rational>> A;
            std::vector<Rational> b;
            for (int i : pick) {
                const auto& row = rows[static_cast<std::size_t>(i - 1)];
                A.emplace_back(row.begin() + 1, row.end());
                b.push_back(-row[0]);
            }
            auto Q = solve(A, b);
            if (!Q) return;
            Rational obj;
            if (evaluate(*Q, obj) && (!best || obj > *best)) best = obj;
            return;
        }
        for (int i = start; i <= N; ++i) {
            pick[static_cast<std::size_t>(depth)] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 1, 0);
    if (!best) throw std::runtime_error("empty polytope");
    return *best;
}

}  // namespace kt
