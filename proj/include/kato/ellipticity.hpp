#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "kato/decomposition.hpp"
#include "kato/numeric.hpp"

namespace kato {

/// Sorted 1-based component indices.
using OperatorSubset = std::vector<int>;

OperatorSubset complement(const OperatorSubset& I, int N);
bool is_subset(const OperatorSubset& a, const OperatorSubset& b);
bool contains(const OperatorSubset& I, int j);
OperatorSubset set_intersection(const OperatorSubset& a, const OperatorSubset& b);
/// "{1,3}", "{}" for the empty set.
std::string to_string(const OperatorSubset& I);
/// "2,3" or "{2,3}"; rejects duplicates, empty input and indices outside 1..N.
OperatorSubset parse_operator_subset(std::string_view text, int N);

struct EllipticityReport {
    bool is_elliptic = false;
    /// A minimal elliptic subset of I, or a maximal non-elliptic superset.
    OperatorSubset witness;
};

std::vector<OperatorSubset> minimal_elliptic_sets(const Decomposition& d);

/// The pairs {j, N+2-j} whose choices build the NE family.
std::vector<std::pair<int, int>> ne_pairs(const Decomposition& d);
/// Visits every member of NE; the first pair is most significant and j is
/// chosen before N+2-j. Stops early when the callback returns false.
void for_each_ne_set(const Decomposition& d, const std::function<bool(const OperatorSubset&)>& visit);
std::vector<OperatorSubset> ne_sets(const Decomposition& d);
bool is_ne_set(const Decomposition& d, const OperatorSubset& J);

std::vector<OperatorSubset> maximal_non_elliptic_sets(const Decomposition& d);

/// Throws ValidationError for an empty I or an index outside 1..N, and
/// InternalError if the two classification routes disagree.
EllipticityReport is_elliptic(const Decomposition& d, const OperatorSubset& I);

/// SO(n-1) constituents of the SO(n) module with highest weight `mu`, by the
/// interlacing rule. Throws ValidationError for n < 4.
std::vector<std::vector<HalfInt>> branch_to_so_n_minus_1(int n, const std::vector<HalfInt>& mu);

struct BranchingDiagnostic {
    bool holds = false;
    /// SO(n-1) constituents of V missing from every W_j, j in I.
    std::vector<std::vector<HalfInt>> missing;
};

/// Necessary condition for ellipticity: every SO(n-1) constituent of V occurs
/// in some W_j with j in I. A failure proves non-ellipticity; success proves
/// nothing.
BranchingDiagnostic check_nonelliptic_necessary(const Decomposition& d, const OperatorSubset& I);

/// {j : w_j >= 0} and {j : w_j <= 0}; both are always elliptic.
OperatorSubset nonnegative_weight_set(const Decomposition& d);
OperatorSubset nonpositive_weight_set(const Decomposition& d);

}  // namespace kato
