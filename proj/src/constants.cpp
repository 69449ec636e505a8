#include "kato/constants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace kato {
namespace {

const Rational kHalf(1, 2);

bool half_integral_top_case(const Decomposition& d) {
    return d.case_tag == CaseTag::two_nu_plus_one && d.properly_half_integral();
}

// Product-over-complement form of pi_i at the vertex Q_J.
Rational pi_product_form(const Decomposition& d, int i, const OperatorSubset& J) {
    const Rational& wi = d.w_tilde(i);
    Rational value = d.N % 2 == 0 ? wi - kHalf : Rational(1);
    for (int j : J) value *= wi + d.w_tilde(j);
    for (int k = 1; k <= d.N; ++k) {
        if (k == i || contains(J, k)) continue;
        value /= wi - d.w_tilde(k);
    }
    return value;
}

std::vector<Rational> squares_of(const Decomposition& d, const OperatorSubset& idx) {
    std::vector<Rational> out;
    for (int j : idx) out.push_back(d.w_tilde(j) * d.w_tilde(j));
    return out;
}

OperatorSubset range(int a, int b) {
    OperatorSubset out;
    for (int j = a; j <= b; ++j) out.push_back(j);
    return out;
}

OperatorSubset set_union(const OperatorSubset& a, const OperatorSubset& b) {
    OperatorSubset out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool perfect_square(const BigInt& v, BigInt& root) {
    if (v < 0) return false;
    root = boost::multiprecision::sqrt(v);
    return root * root == v;
}

// Closed-form evaluator: carries the translated weights and N.
class Forms {
public:
    explicit Forms(const Decomposition& d) : d_(d), N_(d.N), M_((d.N + 1) / 2) {}

    const Rational& t(int i) const { return d_.w_tilde(i); }
    const Rational& w(int i) const { return d_.w(i); }
    int partner(int j) const { return N_ + 2 - j; }
    int N() const { return N_; }
    int M() const { return M_; }

    // Largest-term choice of J avoiding i, from the pair comparison rule.
    OperatorSubset j_max(int i) const {
        if (i <= M_) return set_union(range(i + 1, M_), range(partner(i), N_));
        const int ip = partner(i);
        return set_union(range(ip, M_), range(i + 1, N_));
    }

    // (w_i + w_{partner(i)}) / (w_i - w_1) * prod_{j in J, j != partner(i)} (w_i + w_j) / (w_i - w_{partner(j)}).
    Rational paired_term(int i, const OperatorSubset& J) const {
        Rational value = (t(i) + t(partner(i))) / (t(i) - t(1));
        for (int j : J) {
            if (j == partner(i)) continue;
            value *= (t(i) + t(j)) / (t(i) - t(partner(j)));
        }
        return value;
    }

    // Even-N version with the extra (w_i - 1/2) / (w_i - w_{nu+1}).
    Rational paired_term_even(int i, const OperatorSubset& J, const Rational& half_factor) const {
        const int nu1 = N_ / 2 + 1;
        return paired_term(i, J) * half_factor / (t(i) - t(nu1));
    }

private:
    const Decomposition& d_;
    int N_;
    int M_;
};

void add(std::vector<ClosedFormMatch>& out, std::string pattern, Rational value) {
    out.push_back({std::move(pattern), std::move(value)});
}

void odd_closed_forms(const Forms& f, const OperatorSubset& I, const OperatorSubset& Ihat,
                      std::vector<ClosedFormMatch>& out) {
    const int N = f.N();
    const int M = f.M();
    auto prod_plus = [&](int i, int a, int b) {
        Rational p(1);
        for (int k = a; k <= b; ++k) p *= f.t(i) + f.t(k);
        return p;
    };
    auto prod_minus = [&](int i, int a, int b) {
        Rational p(1);
        for (int k = a; k <= b; ++k) {
            if (k != i) p *= f.t(i) - f.t(k);
        }
        return p;
    };

    if (contains(I, 1) && is_subset(I, set_union({1}, range(M + 1, N)))) {
        add(out, "odd (i): {1} <= I <= {1,M+1..N}", 1 - prod_plus(1, M + 1, N) / prod_minus(1, 2, M));
    }
    for (int i = 2; i <= M; ++i) {
        const int P = f.partner(i);
        if (P == i) continue;
        OperatorSubset J0 = range(2, i - 1);
        for (int j = i + 1; j <= M; ++j) J0.push_back(f.partner(j));
        std::sort(J0.begin(), J0.end());
        OperatorSubset core{i, P};
        std::sort(core.begin(), core.end());
        if (!is_subset(core, I) || !is_subset(I, set_union(core, J0))) continue;
        Rational C1 = (f.t(i) + f.t(P)) / (f.t(i) - f.t(1));
        Rational C2 = (f.t(i) + f.t(P)) / (f.t(P) - f.t(1));
        for (int k : J0) {
            C1 *= (f.t(i) + f.t(k)) / (f.t(i) - f.t(f.partner(k)));
            C2 *= (f.t(P) + f.t(k)) / (f.t(P) - f.t(f.partner(k)));
        }
        add(out, "odd (ii): pair {" + std::to_string(i) + "," + std::to_string(P) + "} with slack",
            1 - std::min(C1, C2));
    }
    if (I == range(2, N)) {
        add(out, "odd (iii): I = {2..N}", prod_plus(1, 2, M) / prod_minus(1, M + 1, N));
    }
    if (Ihat.size() == 1 && Ihat[0] >= 2) {
        const int i = Ihat[0];
        add(out, "odd (iv): complement {" + std::to_string(i) + "}", f.paired_term(i, f.j_max(i)));
    }
    if (N >= 3 && I == range(2, N - 1)) {
        const Rational last = prod_plus(N, 2, M) / ((f.t(N) - f.t(1)) * prod_minus(N, M + 1, N - 1));
        add(out, "odd (v): I = {2..N-1}", last + prod_plus(1, 2, M) / prod_minus(1, M + 1, N));
    }
    if (Ihat.size() == 2) {
        for (int i = 2; i <= M - 1; ++i) {
            const int other = N + 1 - i;
            OperatorSubset target{i, other};
            std::sort(target.begin(), target.end());
            if (Ihat != target) continue;
            const auto J = f.j_max(i);
            Rational second = (f.t(i + 1) + f.t(other)) / (f.t(other) - f.t(1));
            for (int j : J) {
                if (j == i + 1) continue;
                second *= (f.t(other) + f.t(j)) / (f.t(other) - f.t(f.partner(j)));
            }
            add(out, "odd (vi): complement {" + std::to_string(i) + "," + std::to_string(other) + "}",
                f.paired_term(i, J) + second);
        }
    }
}

void even_closed_forms(const Forms& f, const OperatorSubset& I, const OperatorSubset& Ihat,
                       std::vector<ClosedFormMatch>& out) {
    const int N = f.N();
    const int nu = N / 2;
    auto h = [&](int i) { return f.t(i) - kHalf; };
    auto prod_plus = [&](int i, int a, int b) {
        Rational p(1);
        for (int k = a; k <= b; ++k) p *= f.t(i) + f.t(k);
        return p;
    };
    auto prod_minus = [&](int i, int a, int b) {
        Rational p(1);
        for (int k = a; k <= b; ++k) {
            if (k != i) p *= f.t(i) - f.t(k);
        }
        return p;
    };

    const Rational all_but_first = h(1) * prod_plus(1, 2, nu) / prod_minus(1, nu + 1, N);
    const Rational middle_alone = h(nu + 1) * prod_plus(nu + 1, nu + 2, N) / prod_minus(nu + 1, 1, nu);

    if (contains(I, 1) && is_subset(I, set_union({1}, range(nu + 2, N)))) {
        add(out, "even (i): {1} <= I <= {1,nu+2..N}", 1 - h(1) * prod_plus(1, nu + 2, N) / prod_minus(1, 2, nu + 1));
    }
    if (contains(I, nu + 1) && is_subset(I, range(2, nu + 1))) {
        add(out, "even (ii): {nu+1} <= I <= {2..nu+1}",
            1 - h(nu + 1) * prod_plus(nu + 1, 2, nu) /
                    ((f.t(nu + 1) - f.t(1)) * prod_minus(nu + 1, nu + 2, N)));
    }
    for (int i = 2; i <= nu; ++i) {
        const int P = f.partner(i);
        OperatorSubset J0 = range(2, i - 1);
        for (int j = i + 1; j <= nu; ++j) J0.push_back(f.partner(j));
        std::sort(J0.begin(), J0.end());
        OperatorSubset core{i, P};
        if (!is_subset(core, I) || !is_subset(I, set_union(core, J0))) continue;
        Rational C1 = (f.t(i) + f.t(P)) * h(i) / ((f.t(i) - f.t(nu + 1)) * (f.t(i) - f.t(1)));
        Rational C2 = (f.t(i) + f.t(P)) * h(P) / ((f.t(P) - f.t(nu + 1)) * (f.t(P) - f.t(1)));
        for (int k : J0) {
            C1 *= (f.t(i) + f.t(k)) / (f.t(i) - f.t(f.partner(k)));
            C2 *= (f.t(P) + f.t(k)) / (f.t(P) - f.t(f.partner(k)));
        }
        add(out, "even (iii): pair {" + std::to_string(i) + "," + std::to_string(P) + "} with slack",
            1 - std::min(C1, C2));
    }
    if (I == range(2, N)) add(out, "even (iv): I = {2..N}", all_but_first);
    if (nu >= 1 && Ihat == OperatorSubset{nu + 1}) add(out, "even (v): complement {nu+1}", middle_alone);
    if (Ihat.size() == 1 && Ihat[0] >= 2 && Ihat[0] != nu + 1) {
        const int i = Ihat[0];
        add(out, "even (vi): complement {" + std::to_string(i) + "}", f.paired_term_even(i, f.j_max(i), h(i)));
    }
    if (N >= 4 && I == range(2, N - 1)) {
        const Rational last = h(N) * prod_plus(N, 2, nu) / ((f.t(N) - f.t(1)) * prod_minus(N, nu + 1, N - 1));
        add(out, "even (vii): I = {2..N-1}", all_but_first + last);
    }
    if (nu >= 2 && I == set_union(range(1, nu - 1), range(nu + 2, N))) {
        const Rational first = h(nu) * prod_plus(nu, nu + 2, N) /
                               ((f.t(nu) - f.t(nu + 1)) * prod_minus(nu, 1, nu - 1));
        add(out, "even (viii): I = {1..nu-1,nu+2..N}", first + middle_alone);
    }
    if (Ihat.size() == 2) {
        for (int i = 2; i <= nu - 1; ++i) {
            const int other = N + 1 - i;
            if (Ihat != OperatorSubset{i, other}) continue;
            const auto J = f.j_max(i);
            Rational second = (f.t(i + 1) + f.t(other)) * h(other) /
                              ((f.t(other) - f.t(1)) * (f.t(other) - f.t(nu + 1)));
            for (int j : J) {
                if (j == i + 1) continue;
                second *= (f.t(other) + f.t(j)) / (f.t(other) - f.t(f.partner(j)));
            }
            add(out, "even (ix): complement {" + std::to_string(i) + "," + std::to_string(other) + "}",
                f.paired_term_even(i, J, h(i)) + second);
        }
    }
}

}  // namespace

int vertex_degree(const Decomposition& d) { return (d.N + 1) / 2; }

Rational pi_affine(const Decomposition& d, int i, const std::vector<Rational>& Q) {
    const int M = vertex_degree(d);
    if (static_cast<int>(Q.size()) != M - 1) throw ValidationError("q_size", "wrong number of Q coordinates");
    const Rational& wi = d.w_tilde(i);
    const Rational wi2 = wi * wi;
    Rational numerator(0);
    for (int k = 1; k <= M; ++k) {
        const Rational Qk = k == 1 ? Rational(1) : Q[static_cast<std::size_t>(k - 2)];
        numerator += (k % 2 == 1 ? 1 : -1) * ipow(wi2, static_cast<unsigned>(M - k)) * Qk;
    }
    if (d.N % 2 == 0) numerator *= wi - kHalf;
    Rational denominator(1);
    for (int k = 1; k <= d.N; ++k) {
        if (k != i) denominator *= wi - d.w_tilde(k);
    }
    return numerator / denominator;
}

VertexPoint vertex_values(const Decomposition& d, const OperatorSubset& J) {
    const int M = vertex_degree(d);
    if (static_cast<int>(J.size()) != M - 1) {
        throw ValidationError("vertex_size", "vertex sets have " + std::to_string(M - 1) + " elements, got " +
                                                 to_string(J));
    }
    VertexPoint v;
    v.J = J;
    const auto sq = squares_of(d, J);
    for (int k = 2; k <= M; ++k) v.Q.push_back(elementary_symmetric(sq, static_cast<std::size_t>(k - 1)));
    Rational total(0);
    for (int i = 1; i <= d.N; ++i) {
        Rational value = contains(J, i) ? Rational(0) : pi_product_form(d, i, J);
        if (value != pi_affine(d, i, v.Q)) {
            throw InternalError("vertex " + to_string(J) + ": affine and product forms of pi_" + std::to_string(i) +
                                " disagree");
        }
        total += value;
        v.pi_values.emplace(i, std::move(value));
    }
    if (total != 1) throw InternalError("vertex " + to_string(J) + ": projection norms do not sum to 1");
    return v;
}

VertexPoint vertex(const Decomposition& d, const OperatorSubset& J) {
    if (!is_ne_set(d, J)) throw ValidationError("not_ne", to_string(J) + " is not a member of NE");
    return vertex_values(d, J);
}

std::vector<VertexPoint> ne_vertices(const Decomposition& d) {
    std::vector<VertexPoint> out;
    for_each_ne_set(d, [&](const OperatorSubset& J) {
        out.push_back(vertex_values(d, J));
        return true;
    });
    return out;
}

KatoResult kato_constant(const Decomposition& d, const OperatorSubset& I) {
    return kato_constant(d, I, ne_vertices(d));
}

KatoResult kato_constant(const Decomposition& d, const OperatorSubset& I, const std::vector<VertexPoint>& vertices) {
    if (I.empty()) throw ValidationError("empty_operator", "operator index set is empty");
    for (int j : I) {
        if (j < 1 || j > d.N) {
            throw ValidationError("index_range",
                                  "operator index " + std::to_string(j) + " is outside 1.." + std::to_string(d.N));
        }
    }
    const bool exceptional = half_integral_top_case(d);
    const int middle = d.nu + 1;
    auto attainable = [&](const OperatorSubset& J) { return !(exceptional && contains(J, middle)); };

    std::optional<Rational> best_max, best_min;
    const OperatorSubset* best_J = nullptr;
    for (const auto& v : vertices) {
        const OperatorSubset& J = v.J;
        Rational outside(0), inside(0);
        for (const auto& [i, pi] : v.pi_values) {
            if (contains(J, i)) continue;
            (contains(I, i) ? inside : outside) += pi;
        }
        bool take = !best_max || outside > *best_max;
        if (!take && outside == *best_max) {
            const bool a_new = attainable(J), a_old = attainable(*best_J);
            take = (a_new && !a_old) || (a_new == a_old && J < *best_J);
        }
        if (take) {
            best_max = outside;
            best_J = &J;
        }
        if (!best_min || inside < *best_min) best_min = inside;
    }
    if (!best_J) throw InternalError("NE family is empty");
    if (*best_max != 1 - *best_min) {
        throw InternalError("max form and one-minus-min form disagree for I=" + to_string(I));
    }
    KatoResult r;
    r.k_squared = *best_max;
    r.min_form = *best_min;
    r.k_decimal = std::sqrt(to_double(r.k_squared));
    r.sharp = attainable(*best_J);
    r.extremal_J = *best_J;
    r.equality_case.vanishing_set = *best_J;
    r.equality_case.gradient_set = set_intersection(complement(I, d.N), complement(*best_J, d.N));
    return r;
}

bool is_half_integral_n3(const Decomposition& d) {
    return d.N == 3 && d.nu == 1 && d.properly_half_integral() && d.n % 2 == 1;
}

HalfIntegralN3Constants half_integral_n3_constants(const Decomposition& d) {
    if (!is_half_integral_n3(d)) {
        throw ValidationError("pattern", "sharpened constants need N=3, lambda=(k,...,k) properly half-integral, n odd");
    }
    const Rational k = d.lambda[0].to_rational();
    const Rational n(d.n);
    const Rational a = 2 * k + n - 1;
    HalfIntegralN3Constants c;
    c.k2_of_2 = 1 - 1 / (2 * k * a);
    c.k2_of_23 = (a * a - 1) / (a * (4 * k + n - 1));
    c.k2_of_12 = (4 * k * k - 1) / (2 * k * (4 * k + n - 1));
    return c;
}

std::vector<ClosedFormMatch> closed_forms(const Decomposition& d, const OperatorSubset& I) {
    std::vector<ClosedFormMatch> out;
    if (I.empty() || !is_elliptic(d, I).is_elliptic) return out;
    const int N = d.N;
    const Forms f(d);
    const OperatorSubset Ihat = complement(I, N);

    if (is_half_integral_n3(d)) {
        const auto c = half_integral_n3_constants(d);
        if (I == OperatorSubset{2}) add(out, "half-integral N=3 sharpened {2}", c.k2_of_2);
        if (I == OperatorSubset{2, 3}) add(out, "half-integral N=3 sharpened {2,3}", c.k2_of_23);
        if (I == OperatorSubset{1, 2}) add(out, "half-integral N=3 sharpened {1,2}", c.k2_of_12);
    }
    if (N == 2) {
        if (I == OperatorSubset{1}) add(out, "N=2 {1}", f.w(1) / (f.w(1) - f.w(2)));
        if (I == OperatorSubset{2}) add(out, "N=2 {2}", -f.w(2) / (f.w(1) - f.w(2)));
    }
    if (N == 3) {
        if (I == OperatorSubset{1} || I == OperatorSubset{1, 3}) add(out, "N=3 {1},{1,3}", f.w(1) / (f.w(1) - f.w(2)));
        if (I == OperatorSubset{2, 3}) add(out, "N=3 {2,3}", -f.w(3) / (f.w(1) - f.w(3)));
        if (I == OperatorSubset{1, 2}) add(out, "N=3 {1,2}", f.w(1) / (f.w(1) - f.w(3)));
    }
    if (N == 4) {
        const Rational n(d.n);
        const Rational s = (n - 2) / 2;
        if (I == OperatorSubset{1}) {
            add(out, "N=4 {1}",
                1 - (f.w(1) + s) * (f.w(1) + f.w(4) + n - 1) / ((f.w(1) - f.w(2)) * (f.w(1) - f.w(3))));
        }
        if (I == OperatorSubset{3}) {
            add(out, "N=4 {3}",
                1 - (f.w(3) + s) * (f.w(3) + f.w(2) + n - 1) / ((f.w(3) - f.w(4)) * (f.w(3) - f.w(1))));
        }
        if (I == OperatorSubset{2, 4}) {
            const Rational a = (f.w(4) + s) * (f.w(2) + f.w(4) + n - 1) / ((f.w(4) - f.w(1)) * (f.w(4) - f.w(3)));
            const Rational b = (f.w(2) + s) * (f.w(2) + f.w(4) + n - 1) / ((f.w(2) - f.w(1)) * (f.w(2) - f.w(3)));
            add(out, "N=4 {2,4}", 1 - std::min(a, b));
        }
    }
    if (N % 2 == 1 && N >= 3) odd_closed_forms(f, I, Ihat, out);
    if (N % 2 == 0) even_closed_forms(f, I, Ihat, out);
    return out;
}

std::optional<Rational> closed_form(const Decomposition& d, const OperatorSubset& I) {
    auto all = closed_forms(d, I);
    if (all.empty()) return std::nullopt;
    return all.front().k_squared;
}

OperatorSubset positive_weight_set(const Decomposition& d) {
    OperatorSubset out;
    for (int j = 1; j <= d.N; ++j) {
        if (d.w(j) > 0) out.push_back(j);
    }
    return out;
}

OperatorSubset negative_weight_set(const Decomposition& d) {
    OperatorSubset out;
    for (int j = 1; j <= d.N; ++j) {
        if (d.w(j) < 0) out.push_back(j);
    }
    return out;
}

PlusMinusConstants p_plus_minus_constants(const Decomposition& d) {
    std::optional<Rational> max_negative, min_positive;
    for (int j = 1; j <= d.N; ++j) {
        const Rational& w = d.w(j);
        if (w == 0) {
            throw ValidationError("zero_weight", "conformal weight w_" + std::to_string(j) + " vanishes");
        }
        if (w < 0 && (!max_negative || w > *max_negative)) max_negative = w;
        if (w > 0 && (!min_positive || w < *min_positive)) min_positive = w;
    }
    if (!max_negative || !min_positive) {
        throw ValidationError("one_sided", "conformal weights do not take both signs");
    }
    PlusMinusConstants c;
    c.k_plus = d.w(1) / (d.w(1) - *max_negative);
    c.k_minus = d.w(d.N) / (d.w(d.N) - *min_positive);
    return c;
}

std::vector<QBound> q_bounds(const Decomposition& d) {
    std::vector<QBound> out;
    if (d.N < 3) return out;
    const int M = vertex_degree(d);
    const OperatorSubset low_set = range(2, M);
    const OperatorSubset high_set = d.N % 2 == 1 ? range(M + 1, d.N) : range(M + 2, d.N);
    const auto low = squares_of(d, low_set);
    const auto high = squares_of(d, high_set);
    for (int k = 2; k <= M; ++k) {
        out.push_back({elementary_symmetric(low, static_cast<std::size_t>(k - 1)),
                       elementary_symmetric(high, static_cast<std::size_t>(k - 1))});
    }
    return out;
}

std::string sqrt_rendering(const Rational& k_squared) {
    const BigInt p = boost::multiprecision::numerator(k_squared);
    const BigInt q = boost::multiprecision::denominator(k_squared);
    BigInt rp, rq;
    if (perfect_square(p, rp) && perfect_square(q, rq)) return to_string(Rational(rp, rq));
    return "√(" + to_string(k_squared) + ")";
}

std::string decimal_rendering(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, value);
    return buf;
}

}  // namespace kato
