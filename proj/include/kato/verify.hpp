#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kato/numeric.hpp"
#include "kato/weights.hpp"

namespace kato {

struct GridSpec {
    int n_min = 3;
    int n_max = 9;
    HalfInt entry_max = HalfInt(3);
};

/// Every dominant weight (integral and half-integral) in the grid.
std::vector<DominantWeight> weight_grid(const GridSpec& grid);

struct SuiteReport {
    std::string name;
    long checks = 0;
    long failures = 0;
    std::vector<std::string> messages;  // first few failures only

    bool passed() const noexcept { return failures == 0 && checks > 0; }
    void check(bool ok, const std::function<std::string()>& describe);
    /// Runs `body`; any exception counts as one failed check.
    void guard(const std::string& context, const std::function<void()>& body);
};

/// Casimir corollaries, power-sum identities up to exponent 9, dimension
/// sums, residue formula against Weyl ratios, partial traces, cancellation
/// and pairing signs.
SuiteReport verify_identities(const GridSpec& grid);
/// max form equals one minus min form for every non-empty I.
SuiteReport verify_dual_form(const GridSpec& grid);
/// Closed forms against the vertex maximization.
SuiteReport verify_closed_forms(const GridSpec& grid);
/// Feasibility of NE vertices and infeasibility of elliptic vertex sets.
SuiteReport verify_vertex_geometry(const GridSpec& grid);
/// Two ellipticity routes, sign-set ellipticity, NE classification and the
/// branching condition, for decompositions with N <= max_N.
SuiteReport verify_ellipticity(const GridSpec& grid, int max_N = 6);
/// Monotonicity in I, k = 1 on non-elliptic I, pair-comparison inequalities.
SuiteReport verify_kato_properties(const GridSpec& grid);

/// "identities", "kato", "ellipticity" or "all".
std::vector<SuiteReport> run_suite(const std::string& suite);

}  // namespace kato
