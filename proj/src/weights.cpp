#include "kato/weights.hpp"

#include <functional>

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

DominantWeight DominantWeight::validate(int n, std::vector<HalfInt> entries) {
    if (n < 3) {
        throw ValidationError("dimension", "dimension n=" + std::to_string(n) + " is below 3");
    }
    const std::size_t m = static_cast<std::size_t>(n / 2);
    if (entries.size() != m) {
        throw ValidationError("entry_count", "so(" + std::to_string(n) + ") weights have " + std::to_string(m) +
                                                 " entries, got " + std::to_string(entries.size()));
    }
    const bool integral = entries.front().is_integral();
    for (std::size_t i = 1; i < m; ++i) {
        if (entries[i].is_integral() != integral) {
            throw ValidationError("mixed_integrality", "entry " + std::to_string(i + 1) +
                                                           " mixes integers and half-integers");
        }
    }
    for (std::size_t i = 0; i + 1 < m; ++i) {
        if (entries[i] < entries[i + 1].abs() || (i + 2 < m && entries[i] < entries[i + 1])) {
            throw ValidationError("dominance", "dominance violated at entry " + std::to_string(i + 2));
        }
    }
    int chirality = 1;
    if (n % 2 == 1) {
        if (entries.back().sign() < 0) {
            throw ValidationError("dominance", "dominance violated at entry " + std::to_string(m) +
                                                   " (odd n needs a non-negative last entry)");
        }
    } else if (entries.back().sign() < 0) {
        chirality = -1;
        entries.back() = entries.back().abs();
    }
    return DominantWeight(n, std::move(entries), chirality);
}

std::vector<HalfInt> DominantWeight::signed_entries() const {
    auto out = entries_;
    if (chirality_ < 0) out.back() = -out.back();
    return out;
}

bool DominantWeight::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

std::vector<Rational> DominantWeight::as_rationals() const {
    std::vector<Rational> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.to_rational());
    return out;
}

std::string DominantWeight::to_string() const {
    std::string s = "(";
    auto signed_ = signed_entries();
    for (std::size_t i = 0; i < signed_.size(); ++i) {
        if (i) s += ",";
        s += signed_[i].to_string();
    }
    return s + ")";
}

std::vector<HalfInt> WeightProfile::reconstruct() const {
    std::vector<HalfInt> out;
    int prev = 0;
    for (int j = 0; j < nu; ++j) {
        for (int c = prev; c < block_prefix_counts[j]; ++c) out.push_back(block_values[j]);
        prev = block_prefix_counts[j];
    }
    return out;
}

WeightProfile profile(const DominantWeight& lambda) {
    WeightProfile p;
    const auto& e = lambda.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (p.block_values.empty() || p.block_values.back() != e[i]) {
            p.block_values.push_back(e[i]);
            p.block_prefix_counts.push_back(static_cast<int>(i) + 1);
        } else {
            p.block_prefix_counts.back() = static_cast<int>(i) + 1;
        }
    }
    p.nu = static_cast<int>(p.block_values.size());
    return p;
}

bool is_properly_half_integral(const DominantWeight& lambda) { return lambda.is_properly_half_integral(); }

bool is_dominant(int n, std::span<const HalfInt> entries) {
    const std::size_t m = entries.size();
    if (m == 0 || m != static_cast<std::size_t>(n / 2)) return false;
    for (std::size_t i = 0; i + 2 < m; ++i) {
        if (entries[i] < entries[i + 1]) return false;
    }
    if (n % 2 == 1) {
        if (m >= 2 && entries[m - 2] < entries[m - 1]) return false;
        return entries[m - 1].sign() >= 0;
    }
    if (m >= 2) return entries[m - 2] >= entries[m - 1].abs();
    // so(2) never reaches here: n >= 3 is enforced upstream.
    return true;
}

DominantWeight parse_weight(int n, std::string_view text) {
    std::vector<HalfInt> entries;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        entries.push_back(parse_at(piece, start, "weight"));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    const std::size_t m = n >= 0 ? static_cast<std::size_t>(n / 2) : 0;
    if (!entries.empty() && entries.size() < m) {
        HalfInt pad = entries.front().is_integral() ? HalfInt(0) : half(1);
        if (!entries.front().is_integral()) {
            throw ValidationError("entry_count", "half-integral weights need all " + std::to_string(m) + " entries");
        }
        entries.resize(m, pad);
    }
    return DominantWeight::validate(n, std::move(entries));
}

std::vector<DominantWeight> enumerate_weights(int n, const HalfInt& max_entry, bool include_half_integral) {
    std::vector<DominantWeight> out;
    const int m = n / 2;
    std::vector<HalfInt> current(static_cast<std::size_t>(m));
    // Entries are generated non-increasing, values in steps of one starting
    // from the smallest admissible value for the integrality class.
    std::function<void(int, const HalfInt&, const HalfInt&)> rec = [&](int pos, const HalfInt& upper,
                                                                       const HalfInt& lowest) {
        if (pos == m) {
            out.push_back(DominantWeight::validate(n, current));
            return;
        }
        for (HalfInt v = lowest; v <= upper; v += HalfInt(1)) {
            current[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, v, lowest);
        }
    };
    rec(0, max_entry, HalfInt(0));
    if (include_half_integral) {
        HalfInt top = max_entry.is_integral() ? max_entry - half(1) : max_entry;
        if (top >= half(1)) rec(0, top, half(1));
    }
    return out;
}

}  // namespace kato
