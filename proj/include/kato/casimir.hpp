#pragma once

#include <span>
#include <vector>

#include "kato/decomposition.hpp"
#include "kato/numeric.hpp"
#include "kato/weights.hpp"

namespace kato {

struct CasimirReport {
    Rational c_lambda;
    std::vector<Rational> delta;  // delta_i = (n - 2i)/2
    std::vector<Rational> x;      // lambda + delta
};

std::vector<Rational> rho_vector(int n);
CasimirReport casimir_report(const DominantWeight& lambda);
Rational casimir_number(const DominantWeight& lambda);
/// c(mu) for any weight of so(n), dominant or not.
Rational casimir_number(int n, std::span<const HalfInt> entries);

/// (c(mu) - c(lambda) - c(tau)) / 2 with c(tau) = n - 1.
Rational conformal_weight(std::span<const HalfInt> target, const DominantWeight& lambda);

/// Weyl dimension formula over the positive roots of B_m or D_m. Throws
/// ValidationError for non-dominant input.
BigInt weyl_dimension(int n, std::span<const HalfInt> entries);
BigInt weyl_dimension(const DominantWeight& mu);

/// dim W_j / dim V from the residue formula; checked against the Weyl ratio.
Rational relative_dimension(const Decomposition& d, int j);
/// Same ratio straight from Weyl dimensions.
Rational weyl_dimension_ratio(const Decomposition& d, int j);

/// sum_i (1/2 + x_i)^ell + sum_i (1/2 - x_i)^ell.
Rational p_ell(const DominantWeight& lambda, unsigned ell);
/// p_ell evaluated at the zero weight of the same so(n).
Rational p_ell_baseline(int n, unsigned ell);

/// ptr Btilde^0 .. ptr Btilde^L from the generating series, by exact
/// truncated division.
std::vector<Rational> ptr_btilde_series(const Decomposition& d, unsigned L);
/// sum_j wtilde_j^ell dim W_j / dim V, the spectral route to the same numbers.
std::vector<Rational> ptr_btilde_spectral(const Decomposition& d, unsigned L);

/// Closed form of ptr Atilde_j; throws InternalError if it disagrees with
/// `ptr_atilde_from_series`.
Rational ptr_atilde(const Decomposition& d, unsigned j);
Rational ptr_atilde_closed_form(const Decomposition& d, unsigned j);
Rational ptr_atilde_from_series(const Decomposition& d, unsigned j);

}  // namespace kato
