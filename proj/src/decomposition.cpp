#include "kato/decomposition.hpp"

#include <algorithm>

#include "kato/casimir.hpp"

namespace kato {

std::string VirtualWeight::label() const {
    switch (kind) {
        case Kind::plus: return "mu^{" + std::to_string(index) + ",+}";
        case Kind::minus: return "mu^{" + std::to_string(index) + ",-}";
        case Kind::zero: break;
    }
    return "mu^0";
}

std::string VirtualWeight::target_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < target_entries.size(); ++i) {
        if (i) s += ",";
        s += target_entries[i].to_string();
    }
    return s + ")";
}

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::two_nu_minus_one: return "N=2nu-1";
        case CaseTag::two_nu: return "N=2nu";
        case CaseTag::two_nu_plus_one: break;
    }
    return "N=2nu+1";
}

std::vector<Rational> Decomposition::conformal_weights() const {
    std::vector<Rational> out;
    for (const auto& c : components) out.push_back(c.w);
    return out;
}

std::vector<Rational> Decomposition::translated_weights() const {
    std::vector<Rational> out;
    for (const auto& c : components) out.push_back(c.w_tilde);
    return out;
}

BigInt Decomposition::dim_V() const { return weyl_dimension(lambda); }

std::vector<VirtualWeight> virtual_weights(const DominantWeight& lambda) {
    const int n = lambda.dimension();
    const int m = lambda.rank();
    const auto& e = lambda.entries();
    std::vector<VirtualWeight> out;
    out.reserve(static_cast<std::size_t>(2 * m + 1));

    auto make = [&](VirtualWeight::Kind kind, int i) {
        VirtualWeight v;
        v.kind = kind;
        v.index = i;
        v.target_entries = e;
        const HalfInt li = i > 0 ? e[static_cast<std::size_t>(i - 1)] : HalfInt(0);
        switch (kind) {
            case VirtualWeight::Kind::plus:
                v.target_entries[static_cast<std::size_t>(i - 1)] += HalfInt(1);
                v.w = Rational(1 - i) + li.to_rational();
                v.effective = is_dominant(n, v.target_entries);
                break;
            case VirtualWeight::Kind::minus:
                v.target_entries[static_cast<std::size_t>(i - 1)] -= HalfInt(1);
                v.w = Rational(1 - n + i) - li.to_rational();
                v.effective = is_dominant(n, v.target_entries);
                break;
            case VirtualWeight::Kind::zero:
                v.w = Rational(1 - n, 2);
                v.effective = n % 2 == 1 && e.back().sign() > 0;
                break;
        }
        if (v.w != conformal_weight(v.target_entries, lambda)) {
            throw InternalError("explicit conformal weight of " + v.label() + " disagrees with the Casimir route");
        }
        return v;
    };

    for (int i = 1; i <= m; ++i) out.push_back(make(VirtualWeight::Kind::plus, i));
    out.push_back(make(VirtualWeight::Kind::zero, 0));
    for (int i = m; i >= 1; --i) out.push_back(make(VirtualWeight::Kind::minus, i));
    return out;
}

Decomposition decompose(const DominantWeight& lambda) {
    const int n = lambda.dimension();
    const int m = lambda.rank();
    const WeightProfile prof = profile(lambda);

    std::vector<VirtualWeight> effective;
    for (auto& v : virtual_weights(lambda)) {
        if (v.effective) effective.push_back(std::move(v));
    }
    std::stable_sort(effective.begin(), effective.end(),
                     [](const VirtualWeight& a, const VirtualWeight& b) { return a.w > b.w; });

    const Rational shift(n - 1, 2);
    std::vector<Component> components;
    for (auto& v : effective) {
        if (!components.empty() && components.back().w == v.w) {
            const bool allowed = n % 2 == 0 && lambda.entries().back().is_zero() && prof.nu >= 2 &&
                                 prof.block_prefix_counts[static_cast<std::size_t>(prof.nu - 2)] == m - 1;
            if (!allowed || components.back().merged()) {
                throw InternalError("unexpected coincidence of conformal weights at " + v.label());
            }
            components.back().dim += weyl_dimension(n, v.target_entries);
            components.back().targets.push_back(std::move(v));
            continue;
        }
        Component c;
        c.j = static_cast<int>(components.size()) + 1;
        c.w = v.w;
        c.w_tilde = v.w + shift;
        c.dim = weyl_dimension(n, v.target_entries);
        c.targets.push_back(std::move(v));
        components.push_back(std::move(c));
    }

    const HalfInt& k_nu = prof.block_values.back();
    CaseTag tag;
    int expected;
    if (k_nu.is_zero()) {
        tag = CaseTag::two_nu_minus_one;
        expected = 2 * prof.nu - 1;
    } else if (n % 2 == 0 || k_nu == half(1)) {
        tag = CaseTag::two_nu;
        expected = 2 * prof.nu;
    } else {
        tag = CaseTag::two_nu_plus_one;
        expected = 2 * prof.nu + 1;
    }
    const int N = static_cast<int>(components.size());
    if (N != expected) {
        throw InternalError("decomposition of " + lambda.to_string() + " has " + std::to_string(N) +
                            " components, case analysis predicts " + std::to_string(expected));
    }
    return Decomposition{lambda, n, prof.nu, N, tag, std::move(components)};
}

std::vector<Rational> translated_weights(const Decomposition& d) { return d.translated_weights(); }

}  // namespace kato
