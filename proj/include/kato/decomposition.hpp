#pragma once

#include <string>
#include <vector>

#include "kato/numeric.hpp"
#include "kato/weights.hpp"

namespace kato {

/// lambda + epsilon_i (plus), lambda - epsilon_i (minus) or lambda itself (zero).
struct VirtualWeight {
    enum class Kind { plus, minus, zero };

    Kind kind = Kind::zero;
    int index = 0;  // i in 1..m; 0 for the zero kind
    std::vector<HalfInt> target_entries;
    Rational w;
    bool effective = false;

    /// "mu^{2,+}", "mu^0".
    std::string label() const;
    std::string target_string() const;
};

struct Component {
    int j = 0;  // 1-based
    std::vector<VirtualWeight> targets;  // two only for the merged middle pair
    Rational w;
    Rational w_tilde;
    BigInt dim;

    bool merged() const noexcept { return targets.size() == 2; }
};

enum class CaseTag { two_nu_minus_one, two_nu, two_nu_plus_one };

std::string to_string(CaseTag tag);

struct Decomposition {
    DominantWeight lambda;
    int n = 0;
    int nu = 0;
    int N = 0;
    CaseTag case_tag = CaseTag::two_nu_minus_one;
    std::vector<Component> components;

    const Component& component(int j) const { return components.at(static_cast<std::size_t>(j - 1)); }
    const Rational& w(int j) const { return component(j).w; }
    const Rational& w_tilde(int j) const { return component(j).w_tilde; }
    std::vector<Rational> conformal_weights() const;
    std::vector<Rational> translated_weights() const;
    bool properly_half_integral() const { return lambda.is_properly_half_integral(); }
    BigInt dim_V() const;
};

/// The 2m+1 virtual weights mu^{1,+}, ..., mu^{m,+}, mu^0, mu^{m,-}, ..., mu^{1,-}.
std::vector<VirtualWeight> virtual_weights(const DominantWeight& lambda);

/// Splitting of R^n (x) V_lambda by decreasing conformal weight.
Decomposition decompose(const DominantWeight& lambda);

std::vector<Rational> translated_weights(const Decomposition& d);

}  // namespace kato
