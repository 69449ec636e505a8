#include "kato/casimir.hpp"

namespace kato {
namespace {

// Coefficients of prod_k (1 + s * a_k t), truncated after degree `deg`.
std::vector<Rational> linear_product(std::span<const Rational> a, int s, std::size_t deg) {
    std::vector<Rational> poly(deg + 1, Rational(0));
    poly[0] = 1;
    for (const auto& v : a) {
        for (std::size_t k = deg; k >= 1; --k) poly[k] += s * v * poly[k - 1];
    }
    return poly;
}

int parity_sign(long k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

std::vector<Rational> rho_vector(int n) {
    std::vector<Rational> delta;
    for (int i = 1; i <= n / 2; ++i) delta.emplace_back(n - 2 * i, 2);
    return delta;
}

CasimirReport casimir_report(const DominantWeight& lambda) {
    CasimirReport r;
    r.delta = rho_vector(lambda.dimension());
    r.c_lambda = casimir_number(lambda);
    const auto l = lambda.as_rationals();
    for (std::size_t i = 0; i < l.size(); ++i) r.x.push_back(l[i] + r.delta[i]);
    return r;
}

Rational casimir_number(int n, std::span<const HalfInt> entries) {
    const auto delta = rho_vector(n);
    Rational c(0);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const Rational mu = entries[i].to_rational();
        c += mu * mu + 2 * mu * delta[i];
    }
    return c;
}

Rational casimir_number(const DominantWeight& lambda) {
    return casimir_number(lambda.dimension(), lambda.entries());
}

Rational conformal_weight(std::span<const HalfInt> target, const DominantWeight& lambda) {
    const int n = lambda.dimension();
    return (casimir_number(n, target) - casimir_number(lambda) - Rational(n - 1)) / 2;
}

BigInt weyl_dimension(int n, std::span<const HalfInt> entries) {
    if (!is_dominant(n, entries)) {
        throw ValidationError("dominance", "Weyl dimension needs a dominant weight of so(" + std::to_string(n) + ")");
    }
    const auto delta = rho_vector(n);
    const std::size_t m = delta.size();
    std::vector<Rational> shifted(m);
    for (std::size_t i = 0; i < m; ++i) shifted[i] = entries[i].to_rational() + delta[i];

    Rational num(1), den(1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            num *= (shifted[i] - shifted[j]) * (shifted[i] + shifted[j]);
            den *= (delta[i] - delta[j]) * (delta[i] + delta[j]);
        }
        if (n % 2 == 1) {
            num *= shifted[i];
            den *= delta[i];
        }
    }
    const Rational dim = num / den;
    if (boost::multiprecision::denominator(dim) != 1) {
        throw InternalError("Weyl dimension is not an integer");
    }
    return boost::multiprecision::numerator(dim);
}

BigInt weyl_dimension(const DominantWeight& mu) { return weyl_dimension(mu.dimension(), mu.entries()); }

Rational weyl_dimension_ratio(const Decomposition& d, int j) {
    return Rational(d.component(j).dim, d.dim_V());
}

Rational relative_dimension(const Decomposition& d, int j) {
    const Rational& wj = d.w_tilde(j);
    Rational r = 2 * wj + (d.N % 2 == 1 ? 1 : -1);
    for (int k = 1; k <= d.N; ++k) {
        if (k == j) continue;
        r *= (wj + d.w_tilde(k)) / (wj - d.w_tilde(k));
    }
    if (r != weyl_dimension_ratio(d, j)) {
        throw InternalError("residue formula for dim W_" + std::to_string(j) + " disagrees with Weyl dimensions");
    }
    return r;
}

Rational p_ell(const DominantWeight& lambda, unsigned ell) {
    const auto x = casimir_report(lambda).x;
    const Rational h(1, 2);
    Rational total(0);
    for (const auto& xi : x) total += ipow(h + xi, ell) + ipow(h - xi, ell);
    return total;
}

Rational p_ell_baseline(int n, unsigned ell) {
    const Rational h(1, 2);
    Rational total(0);
    for (const auto& di : rho_vector(n)) total += ipow(h + di, ell) + ipow(h - di, ell);
    return total;
}

std::vector<Rational> ptr_btilde_series(const Decomposition& d, unsigned L) {
    const auto wt = d.translated_weights();
    const std::size_t deg = L + 1;
    const auto plus = linear_product(wt, 1, deg);
    const auto minus = linear_product(wt, -1, deg);
    const Rational eps(parity_sign(d.N), 2);

    // Clear the denominator: numerator = (t/2) prod(1 - w t) + (1 - eps t) prod(1 + w t).
    std::vector<Rational> series(deg + 1, Rational(0));
    for (std::size_t k = 0; k <= deg; ++k) {
        series[k] = plus[k];
        if (k >= 1) series[k] += minus[k - 1] / 2 - eps * plus[k - 1];
    }
    for (const auto& w : wt) {
        for (std::size_t k = 1; k <= deg; ++k) series[k] += w * series[k - 1];
    }
    if (series[0] != 1) throw InternalError("generating series has constant term other than 1");
    return {series.begin() + 1, series.end()};
}

std::vector<Rational> ptr_btilde_spectral(const Decomposition& d, unsigned L) {
    std::vector<Rational> out(L + 1, Rational(0));
    for (int j = 1; j <= d.N; ++j) {
        const Rational ratio = weyl_dimension_ratio(d, j);
        Rational power(1);
        for (unsigned ell = 0; ell <= L; ++ell) {
            out[ell] += power * ratio;
            power *= d.w_tilde(j);
        }
    }
    return out;
}

Rational ptr_atilde_closed_form(const Decomposition& d, unsigned j) {
    const auto wt = d.translated_weights();
    const int sj = parity_sign(j);
    const int sN = parity_sign(d.N);
    return Rational(1 + sj) * elementary_symmetric(wt, j + 1) + Rational(sj - sN, 2) * elementary_symmetric(wt, j);
}

Rational ptr_atilde_from_series(const Decomposition& d, unsigned j) {
    const auto wt = d.translated_weights();
    const auto ptr = ptr_btilde_series(d, j);
    Rational total(0);
    for (unsigned ell = 0; ell <= j; ++ell) {
        total += parity_sign(ell) * elementary_symmetric(wt, ell) * ptr[j - ell];
    }
    return total;
}

Rational ptr_atilde(const Decomposition& d, unsigned j) {
    Rational closed = ptr_atilde_closed_form(d, j);
    if (closed != ptr_atilde_from_series(d, j)) {
        throw InternalError("ptr Atilde_" + std::to_string(j) + " closed form disagrees with the series assembly");
    }
    return closed;
}

}  // namespace kato
