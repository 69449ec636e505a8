#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kato/numeric.hpp"

namespace kato {

/// Highest weight of an irreducible so(n) representation, in the orthonormal
/// epsilon basis. For even n the last entry is stored as |lambda_m|; the sign
/// survives only as `chirality()`, since every computation here is invariant
/// under the outer automorphism.
class DominantWeight {
public:
    /// Throws ValidationError for n < 3, a wrong entry count, broken
    /// dominance or mixed integral/half-integral entries.
    static DominantWeight validate(int n, std::vector<HalfInt> entries);

    int dimension() const noexcept { return n_; }
    int rank() const noexcept { return n_ / 2; }
    bool odd_dimension() const noexcept { return n_ % 2 == 1; }

    /// Normalized entries, last one non-negative.
    const std::vector<HalfInt>& entries() const noexcept { return entries_; }
    const HalfInt& operator[](std::size_t i) const { return entries_[i]; }
    /// Entries as given, with the chirality sign restored.
    std::vector<HalfInt> signed_entries() const;
    int chirality() const noexcept { return chirality_; }

    bool is_zero() const;
    bool is_properly_half_integral() const { return !entries_.front().is_integral(); }
    std::vector<Rational> as_rationals() const;
    /// "(1,0)" style, chirality included.
    std::string to_string() const;

    friend bool operator==(const DominantWeight&, const DominantWeight&) = default;

private:
    DominantWeight(int n, std::vector<HalfInt> entries, int chirality)
        : n_(n), entries_(std::move(entries)), chirality_(chirality) {}

    int n_ = 0;
    std::vector<HalfInt> entries_;
    int chirality_ = 1;
};

/// lambda written as blocks of equal entries: k_1 > ... > k_nu >= 0, with
/// p_j the number of entries >= k_j.
struct WeightProfile {
    int nu = 0;
    std::vector<HalfInt> block_values;
    std::vector<int> block_prefix_counts;

    std::vector<HalfInt> reconstruct() const;
};

WeightProfile profile(const DominantWeight& lambda);
bool is_properly_half_integral(const DominantWeight& lambda);

/// Dominance test for B_m (n odd) or D_m (n even); negative last entries are
/// allowed for D_m. Does not check integrality.
bool is_dominant(int n, std::span<const HalfInt> entries);

/// Comma-separated entries, half-integers written "3/2". Missing trailing
/// zeros are padded ("1" in n=6 is (1,0,0)).
DominantWeight parse_weight(int n, std::string_view text);

/// All normalized dominant weights of so(n) with entries in [0, max_entry].
std::vector<DominantWeight> enumerate_weights(int n, const HalfInt& max_entry, bool include_half_integral = true);

}  // namespace kato
