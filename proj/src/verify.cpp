#include "kato/verify.hpp"

#include <algorithm>
#include <bit>

#include "kato/casimir.hpp"
#include "kato/constants.hpp"
#include "kato/decomposition.hpp"
#include "kato/ellipticity.hpp"

namespace kato {
namespace {

constexpr std::size_t kMaxMessages = 20;

std::vector<OperatorSubset> all_nonempty_subsets(int N) {
    std::vector<OperatorSubset> out;
    for (unsigned mask = 1; mask < (1U << N); ++mask) {
        OperatorSubset I;
        for (int j = 1; j <= N; ++j) {
            if (mask & (1U << (j - 1))) I.push_back(j);
        }
        out.push_back(std::move(I));
    }
    return out;
}

std::vector<OperatorSubset> subsets_of_size(int N, int size) {
    std::vector<OperatorSubset> out;
    for (unsigned mask = 0; mask < (1U << N); ++mask) {
        if (std::popcount(mask) != size) continue;
        OperatorSubset J;
        for (int j = 1; j <= N; ++j) {
            if (mask & (1U << (j - 1))) J.push_back(j);
        }
        out.push_back(std::move(J));
    }
    return out;
}

bool half_integral_top(const Decomposition& d) {
    return d.case_tag == CaseTag::two_nu_plus_one && d.properly_half_integral();
}

std::string where(const Decomposition& d) {
    return "n=" + std::to_string(d.n) + " lambda=" + d.lambda.to_string();
}

}  // namespace

std::vector<DominantWeight> weight_grid(const GridSpec& grid) {
    std::vector<DominantWeight> out;
    for (int n = grid.n_min; n <= grid.n_max; ++n) {
        auto ws = enumerate_weights(n, grid.entry_max, true);
        out.insert(out.end(), std::make_move_iterator(ws.begin()), std::make_move_iterator(ws.end()));
    }
    return out;
}

void SuiteReport::check(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (ok) return;
    ++failures;
    if (messages.size() < kMaxMessages) messages.push_back(describe());
}

void SuiteReport::guard(const std::string& context, const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        ++checks;
        ++failures;
        if (messages.size() < kMaxMessages) messages.push_back(context + ": " + e.what());
    }
}

SuiteReport verify_identities(const GridSpec& grid) {
    SuiteReport rep{"identities", 0, 0, {}};
    for (const auto& lambda : weight_grid(grid)) {
        rep.guard(lambda.to_string(), [&] {
            const Decomposition d = decompose(lambda);
            const int n = d.n;
            const auto wt = d.translated_weights();
            const Rational top(n - 1, 2);
            const bool even_N = d.N % 2 == 0;
            const Rational c = casimir_number(lambda);

            const Rational linear = power_sum(wt, 1) - top - (even_N ? Rational(1, 2) : Rational(0));
            rep.check(linear == 0, [&] { return where(d) + ": linear trace identity fails"; });
            const Rational cubic = power_sum(wt, 3) - ipow(top, 3) - (even_N ? Rational(1, 8) : Rational(0));
            rep.check(cubic == 3 * c, [&] { return where(d) + ": cubic trace identity fails"; });

            for (unsigned k = 0; 2 * k + 1 <= 9; ++k) {
                const unsigned e = 2 * k + 1;
                Rational lhs = power_sum(wt, e) - ipow(top, e);
                if (even_N) lhs -= ipow(Rational(1, 2), e);
                const Rational rhs = p_ell(lambda, e) - p_ell_baseline(n, e);
                rep.check(lhs == rhs, [&] { return where(d) + ": power-sum identity fails at exponent " + std::to_string(e); });
            }

            Rational rel_sum(0);
            BigInt dim_sum(0);
            for (int j = 1; j <= d.N; ++j) {
                rel_sum += relative_dimension(d, j);  // throws on disagreement with the Weyl ratio
                dim_sum += d.component(j).dim;
            }
            rep.check(rel_sum == n, [&] { return where(d) + ": relative dimensions do not sum to n"; });
            rep.check(dim_sum == n * d.dim_V(), [&] { return where(d) + ": component dimensions do not sum to n dim V"; });

            const auto series = ptr_btilde_series(d, 8);
            const auto spectral = ptr_btilde_spectral(d, 8);
            rep.check(series == spectral, [&] { return where(d) + ": generating series disagrees with spectral traces"; });
            rep.check(series[1] == Rational(n * (n - 1), 2),
                      [&] { return where(d) + ": ptr Btilde differs from n(n-1)/2"; });
            for (unsigned j = 0; j <= 8; ++j) {
                rep.check(ptr_atilde_closed_form(d, j) == ptr_atilde_from_series(d, j),
                          [&] { return where(d) + ": ptr Atilde_" + std::to_string(j) + " mismatch"; });
            }

            for (int j = 1; j + 1 <= d.N; ++j) {
                rep.check(d.w(j) > d.w(j + 1), [&] { return where(d) + ": conformal weights not strictly decreasing"; });
            }

            const auto virt = virtual_weights(lambda);
            const int m = lambda.rank();
            auto wt_of = [&](VirtualWeight::Kind kind, int i) {
                for (const auto& v : virt) {
                    if (v.kind == kind && v.index == i) return v.w + top;
                }
                throw InternalError("missing virtual weight");
            };
            for (int i = 1; i < m; ++i) {
                if (lambda[static_cast<std::size_t>(i - 1)] != lambda[static_cast<std::size_t>(i)]) continue;
                rep.check(wt_of(VirtualWeight::Kind::plus, i + 1) + wt_of(VirtualWeight::Kind::minus, i) == 0,
                          [&] { return where(d) + ": cancellation rule fails at i=" + std::to_string(i); });
            }

            const WeightProfile prof = profile(lambda);
            for (int j = 2; j <= d.nu; ++j) {
                const Rational expected = prof.block_values[static_cast<std::size_t>(j - 1)].to_rational() -
                                          prof.block_values[static_cast<std::size_t>(j - 2)].to_rational();
                const Rational sum = d.w_tilde(j) + d.w_tilde(d.N + 2 - j);
                rep.check(sum == expected && sum < 0, [&] { return where(d) + ": pairing sign fails at j=" + std::to_string(j); });
            }
            if (d.case_tag == CaseTag::two_nu_plus_one) {
                const Rational sum = d.w_tilde(d.nu + 1) + d.w_tilde(d.nu + 2);
                rep.check(sum == -lambda.entries().back().to_rational(),
                          [&] { return where(d) + ": middle pairing sign fails"; });
            }
        });
    }
    return rep;
}

SuiteReport verify_dual_form(const GridSpec& grid) {
    SuiteReport rep{"dual form", 0, 0, {}};
    for (const auto& lambda : weight_grid(grid)) {
        rep.guard(lambda.to_string(), [&] {
            const Decomposition d = decompose(lambda);
            const auto vertices = ne_vertices(d);
            for (const auto& I : all_nonempty_subsets(d.N)) {
                const KatoResult k = kato_constant(d, I, vertices);
                rep.check(k.k_squared == 1 - k.min_form,
                          [&] { return where(d) + " I=" + to_string(I) + ": max form differs from 1 - min form"; });
            }
        });
    }
    return rep;
}

SuiteReport verify_closed_forms(const GridSpec& grid) {
    SuiteReport rep{"closed forms", 0, 0, {}};
    for (const auto& lambda : weight_grid(grid)) {
        rep.guard(lambda.to_string(), [&] {
            const Decomposition d = decompose(lambda);
            const auto vertices = ne_vertices(d);
            for (const auto& I : all_nonempty_subsets(d.N)) {
                const auto matches = closed_forms(d, I);
                if (matches.empty()) continue;
                const KatoResult k = kato_constant(d, I, vertices);
                for (const auto& m : matches) {
                    const bool sharpened = m.pattern.rfind("half-integral", 0) == 0;
                    if (sharpened) {
                        rep.check(m.k_squared <= k.k_squared, [&] {
                            return where(d) + " I=" + to_string(I) + ": sharpened value exceeds the vertex bound";
                        });
                    } else if (k.sharp) {
                        rep.check(m.k_squared == k.k_squared, [&] {
                            return where(d) + " I=" + to_string(I) + ": " + m.pattern + " gives " +
                                   to_string(m.k_squared) + ", vertex maximization gives " + to_string(k.k_squared);
                        });
                    }
                }
            }
        });
    }
    return rep;
}

SuiteReport verify_vertex_geometry(const GridSpec& grid) {
    SuiteReport rep{"vertex geometry", 0, 0, {}};
    for (const auto& lambda : weight_grid(grid)) {
        rep.guard(lambda.to_string(), [&] {
            const Decomposition d = decompose(lambda);
            const bool exceptional = half_integral_top(d);
            const int middle = d.nu + 1;
            const int size = vertex_degree(d) - 1;
            for (const auto& J : subsets_of_size(d.N, size)) {
                if (exceptional && contains(J, middle)) continue;
                const VertexPoint v = vertex_values(d, J);  // throws if the norms do not sum to 1
                Rational total(0);
                bool any_negative = false;
                for (const auto& [i, pi] : v.pi_values) {
                    total += pi;
                    if (pi < 0) any_negative = true;
                }
                rep.check(total == 1, [&] { return where(d) + " J=" + to_string(J) + ": norms do not sum to 1"; });
                if (is_ne_set(d, J)) {
                    rep.check(!any_negative, [&] { return where(d) + " J=" + to_string(J) + ": NE vertex infeasible"; });
                } else {
                    rep.check(is_elliptic(d, J).is_elliptic,
                              [&] { return where(d) + " J=" + to_string(J) + ": non-NE vertex set is not elliptic"; });
                    rep.check(any_negative,
                              [&] { return where(d) + " J=" + to_string(J) + ": elliptic vertex set is feasible"; });
                }
            }
        });
    }
    return rep;
}

SuiteReport verify_ellipticity(const GridSpec& grid, int max_N) {
    SuiteReport rep{"ellipticity", 0, 0, {}};
    for (const auto& lambda : weight_grid(grid)) {
        rep.guard(lambda.to_string(), [&] {
            const Decomposition d = decompose(lambda);
            if (d.N > max_N) return;
            for (const auto& I : all_nonempty_subsets(d.N)) {
                const EllipticityReport e = is_elliptic(d, I);  // throws if the routes disagree
                rep.check(e.is_elliptic ? is_subset(e.witness, I) : is_subset(I, e.witness),
                          [&] { return where(d) + " I=" + to_string(I) + ": witness inconsistent with verdict"; });
            }
            for (const auto& S : {nonnegative_weight_set(d), nonpositive_weight_set(d)}) {
                rep.check(!S.empty() && is_elliptic(d, S).is_elliptic,
                          [&] { return where(d) + ": sign set " + to_string(S) + " is not elliptic"; });
            }
            const bool exceptional = half_integral_top(d);
            for (const auto& J : ne_sets(d)) {
                if (J.empty()) continue;
                const bool expected_elliptic = exceptional && contains(J, d.nu + 1);
                rep.check(is_elliptic(d, J).is_elliptic == expected_elliptic,
                          [&] { return where(d) + ": NE member " + to_string(J) + " misclassified"; });
            }
            if (d.n >= 4) {
                for (const auto& E : minimal_elliptic_sets(d)) {
                    const auto diag = check_nonelliptic_necessary(d, E);
                    rep.check(diag.holds, [&] {
                        return where(d) + ": branching condition fails for minimal elliptic " + to_string(E);
                    });
                }
            }
        });
    }
    return rep;
}

SuiteReport verify_kato_properties(const GridSpec& grid) {
    SuiteReport rep{"kato properties", 0, 0, {}};
    for (const auto& lambda : weight_grid(grid)) {
        rep.guard(lambda.to_string(), [&] {
            const Decomposition d = decompose(lambda);
            const auto vertices = ne_vertices(d);
            const int N = d.N;
            std::vector<Rational> value(1U << N);
            for (const auto& I : all_nonempty_subsets(N)) {
                unsigned mask = 0;
                for (int j : I) mask |= 1U << (j - 1);
                const KatoResult k = kato_constant(d, I, vertices);
                value[mask] = k.k_squared;
                rep.check(k.k_squared >= 0 && k.k_squared <= 1,
                          [&] { return where(d) + " I=" + to_string(I) + ": constant outside [0,1]"; });
                if (!is_elliptic(d, I).is_elliptic) {
                    rep.check(k.k_squared == 1,
                              [&] { return where(d) + " I=" + to_string(I) + ": non-elliptic constant is not 1"; });
                }
            }
            for (unsigned mask = 1; mask < (1U << N); ++mask) {
                for (int j = 0; j < N; ++j) {
                    const unsigned bigger = mask | (1U << j);
                    if (bigger == mask) continue;
                    rep.check(value[bigger] <= value[mask],
                              [&] { return where(d) + ": constant increases when I grows"; });
                }
            }

            // Pair comparison inequalities feeding the closed forms.
            const int last_pair = d.case_tag == CaseTag::two_nu_plus_one ? d.nu + 1 : d.nu;
            for (int i = 1; i <= N; ++i) {
                for (int j = 2; j <= last_pair; ++j) {
                    const int pj = N + 2 - j;
                    if (i == j || i == pj) continue;
                    const Rational& wi = d.w_tilde(i);
                    const Rational a = (wi + d.w_tilde(j)) / (wi - d.w_tilde(pj));
                    const Rational b = (wi + d.w_tilde(pj)) / (wi - d.w_tilde(j));
                    const bool outer = i < j || pj < i;
                    rep.check(outer ? (a > b && b > 0) : (b > a && a > 0), [&] {
                        return where(d) + ": pair comparison fails at i=" + std::to_string(i) + " j=" + std::to_string(j);
                    });
                }
            }
            if (d.case_tag == CaseTag::two_nu_minus_one) {
                const int nu = d.nu;
                for (int k = 1; k <= nu - 2; ++k) {
                    const Rational lhs = (d.w_tilde(nu) + d.w_tilde(k + 1)) * (d.w_tilde(nu + 1) - d.w_tilde(2 * nu - k));
                    const Rational rhs = (d.w_tilde(nu + 1) + d.w_tilde(k + 1)) * (d.w_tilde(nu) - d.w_tilde(2 * nu - k));
                    rep.check(lhs > rhs && rhs > 0,
                              [&] { return where(d) + ": ratio inequality fails at k=" + std::to_string(k); });
                }
            }

            const auto bounds = q_bounds(d);
            for (const auto& b : bounds) {
                rep.check(b.lower <= b.upper, [&] { return where(d) + ": Q bounds out of order"; });
            }
            for (const auto& v : vertices) {
                if (half_integral_top(d) && contains(v.J, d.nu + 1)) continue;
                for (std::size_t k = 0; k < v.Q.size() && k < bounds.size(); ++k) {
                    rep.check(bounds[k].lower <= v.Q[k] && v.Q[k] <= bounds[k].upper,
                              [&] { return where(d) + " J=" + to_string(v.J) + ": vertex outside Q bounds"; });
                }
            }
        });
    }
    return rep;
}

std::vector<SuiteReport> run_suite(const std::string& suite) {
    const GridSpec identity_grid{3, 11, half(7)};
    const GridSpec kato_grid{3, 9, HalfInt(3)};
    std::vector<SuiteReport> out;
    const bool all = suite == "all";
    if (all || suite == "identities") out.push_back(verify_identities(identity_grid));
    if (all || suite == "kato") {
        out.push_back(verify_dual_form(kato_grid));
        out.push_back(verify_closed_forms(kato_grid));
        out.push_back(verify_vertex_geometry(kato_grid));
        out.push_back(verify_kato_properties(kato_grid));
    }
    if (all || suite == "ellipticity") out.push_back(verify_ellipticity(kato_grid, 6));
    if (out.empty()) {
        throw ValidationError("suite", "unknown suite '" + suite + "' (identities, kato, ellipticity, all)");
    }
    return out;
}

}  // namespace kato
