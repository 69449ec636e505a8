#include "kato/ellipticity.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace kato {

namespace {

// Re-raise a number parse failure with its character offset in the input.
HalfInt parse_at(std::string_view piece, std::size_t offset, const char* what) {
    try {
        return HalfInt::parse(piece);
    } catch (const ValidationError& e) {
        throw ValidationError(e.code(), std::string(what) + " position " + std::to_string(offset + 1) + ": " + e.what());
    }
}

}  // namespace

OperatorSubset complement(const OperatorSubset& I, int N) {
    OperatorSubset out;
    for (int j = 1; j <= N; ++j) {
        if (!contains(I, j)) out.push_back(j);
    }
    return out;
}

bool is_subset(const OperatorSubset& a, const OperatorSubset& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool contains(const OperatorSubset& I, int j) { return std::binary_search(I.begin(), I.end(), j); }

OperatorSubset set_intersection(const OperatorSubset& a, const OperatorSubset& b) {
    OperatorSubset out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string to_string(const OperatorSubset& I) {
    std::string s = "{";
    for (std::size_t i = 0; i < I.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(I[i]);
    }
    return s + "}";
}

OperatorSubset parse_operator_subset(std::string_view text, int N) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.size() >= 2 && text.front() == '{' && text.back() == '}') text = text.substr(1, text.size() - 2);
    OperatorSubset out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        HalfInt v = parse_at(piece, start, "index set");
        if (!v.is_integral() || v < HalfInt(1) || v > HalfInt(N)) {
            throw ValidationError("index_range", "operator index '" + std::string(piece) + "' is outside 1.." +
                                                     std::to_string(N));
        }
        const int j = static_cast<int>(v.twice().convert_to<long>() / 2);
        if (std::find(out.begin(), out.end(), j) != out.end()) {
            throw ValidationError("duplicate_index", "operator index " + std::to_string(j) + " repeated");
        }
        out.push_back(j);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<OperatorSubset> minimal_elliptic_sets(const Decomposition& d) {
    const int nu = d.nu;
    const int N = d.N;
    std::vector<OperatorSubset> out{{1}};
    const bool odd_top = d.case_tag == CaseTag::two_nu_plus_one;
    if (d.case_tag == CaseTag::two_nu || (odd_top && d.properly_half_integral())) out.push_back({nu + 1});
    for (int j = 2; j <= nu; ++j) out.push_back({j, N + 2 - j});
    if (odd_top && !d.properly_half_integral()) out.push_back({nu + 1, nu + 2});
    return out;
}

std::vector<std::pair<int, int>> ne_pairs(const Decomposition& d) {
    const int last = d.case_tag == CaseTag::two_nu_plus_one ? d.nu + 1 : d.nu;
    std::vector<std::pair<int, int>> pairs;
    for (int j = 2; j <= last; ++j) pairs.emplace_back(j, d.N + 2 - j);
    return pairs;
}

void for_each_ne_set(const Decomposition& d, const std::function<bool(const OperatorSubset&)>& visit) {
    const auto pairs = ne_pairs(d);
    const std::size_t P = pairs.size();
    const unsigned long long count = 1ULL << P;
    OperatorSubset J(P);
    for (unsigned long long code = 0; code < count; ++code) {
        for (std::size_t p = 0; p < P; ++p) {
            const bool partner = (code >> (P - 1 - p)) & 1ULL;
            J[p] = partner ? pairs[p].second : pairs[p].first;
        }
        OperatorSubset sorted = J;
        std::sort(sorted.begin(), sorted.end());
        if (!visit(sorted)) return;
    }
}

std::vector<OperatorSubset> ne_sets(const Decomposition& d) {
    std::vector<OperatorSubset> out;
    for_each_ne_set(d, [&](const OperatorSubset& J) {
        out.push_back(J);
        return true;
    });
    return out;
}

bool is_ne_set(const Decomposition& d, const OperatorSubset& J) {
    const auto pairs = ne_pairs(d);
    if (J.size() != pairs.size()) return false;
    for (const auto& [a, b] : pairs) {
        if (contains(J, a) == contains(J, b)) return false;
    }
    return true;
}

std::vector<OperatorSubset> maximal_non_elliptic_sets(const Decomposition& d) {
    auto all = ne_sets(d);
    if (d.case_tag == CaseTag::two_nu_plus_one && d.properly_half_integral()) {
        const int middle = d.nu + 1;
        std::erase_if(all, [&](const OperatorSubset& J) { return contains(J, middle); });
    }
    return all;
}

EllipticityReport is_elliptic(const Decomposition& d, const OperatorSubset& I) {
    if (I.empty()) throw ValidationError("empty_operator", "operator index set is empty");
    for (int j : I) {
        if (j < 1 || j > d.N) {
            throw ValidationError("index_range",
                                  "operator index " + std::to_string(j) + " is outside 1.." + std::to_string(d.N));
        }
    }
    EllipticityReport report;
    bool by_minimal = false;
    for (const auto& E : minimal_elliptic_sets(d)) {
        if (is_subset(E, I)) {
            by_minimal = true;
            report.witness = E;
            break;
        }
    }
    bool by_maximal = true;
    for (const auto& M : maximal_non_elliptic_sets(d)) {
        if (is_subset(I, M)) {
            by_maximal = false;
            if (!by_minimal) report.witness = M;
            break;
        }
    }
    if (by_minimal != by_maximal) {
        throw InternalError("ellipticity routes disagree for I=" + to_string(I));
    }
    report.is_elliptic = by_minimal;
    return report;
}

std::vector<std::vector<HalfInt>> branch_to_so_n_minus_1(int n, const std::vector<HalfInt>& mu) {
    if (n < 4) throw ValidationError("dimension", "branching to so(n-1) needs n >= 4");
    if (!is_dominant(n, mu)) throw ValidationError("dominance", "branching needs a dominant weight");
    const std::size_t m = mu.size();
    const bool odd = n % 2 == 1;
    const std::size_t out_rank = odd ? m : m - 1;

    // Interval [lo_i, hi_i] for each entry of the restricted weight.
    std::vector<HalfInt> lo(out_rank), hi(out_rank);
    for (std::size_t i = 0; i < out_rank; ++i) {
        hi[i] = mu[i];
        if (odd && i + 1 == m) {
            lo[i] = -mu[i];
        } else {
            lo[i] = mu[i + 1].abs();
        }
    }
    std::vector<std::vector<HalfInt>> out;
    std::vector<HalfInt> cur(out_rank);
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == out_rank) {
            out.push_back(cur);
            return;
        }
        for (HalfInt v = hi[pos]; v >= lo[pos]; v -= HalfInt(1)) {
            cur[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

BranchingDiagnostic check_nonelliptic_necessary(const Decomposition& d, const OperatorSubset& I) {
    const int n = d.n;
    std::set<std::vector<HalfInt>> available;
    for (int j : I) {
        for (const auto& target : d.component(j).targets) {
            for (auto& w : branch_to_so_n_minus_1(n, target.target_entries)) available.insert(std::move(w));
        }
    }
    BranchingDiagnostic diag;
    for (auto& w : branch_to_so_n_minus_1(n, d.lambda.entries())) {
        if (!available.contains(w)) diag.missing.push_back(std::move(w));
    }
    diag.holds = diag.missing.empty();
    return diag;
}

OperatorSubset nonnegative_weight_set(const Decomposition& d) {
    OperatorSubset out;
    for (int j = 1; j <= d.N; ++j) {
        if (d.w(j) >= 0) out.push_back(j);
    }
    return out;
}

OperatorSubset nonpositive_weight_set(const Decomposition& d) {
    OperatorSubset out;
    for (int j = 1; j <= d.N; ++j) {
        if (d.w(j) <= 0) out.push_back(j);
    }
    return out;
}

}  // namespace kato
