#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "kato/decomposition.hpp"
#include "kato/ellipticity.hpp"

namespace kato {

enum class RepKind { standard, lambda_p, sym2_traceless };

/// Explicit so(n) action on a real tensor representation with an
/// orthonormal basis. Generators follow (e_i ^ e_j) e_k = delta_ik e_j - delta_jk e_i.
struct RepModel {
    int n = 0;
    RepKind kind = RepKind::standard;
    int p = 1;
    int dim_V = 0;
    std::map<std::pair<int, int>, Eigen::MatrixXd> generators;  // keys (i, j), 0-based, i < j
    double tolerance = 1e-6;

    /// d lambda(e_i ^ e_j) for any i, j (antisymmetric in i, j).
    Eigen::MatrixXd generator(int i, int j) const;
    std::string name() const;
    /// Highest weight used for the symbolic side. Lambda^m with n = 2m is
    /// reducible and is matched against (1,...,1) with doubled multiplicities.
    DominantWeight symbolic_weight() const;
    int multiplicity_factor() const;
};

/// "standard", "lambda^p" or "sym2".
std::pair<RepKind, int> parse_rep_kind(const std::string& text);
RepModel build_rep(int n, RepKind kind, int p = 1);

/// Largest deviation from antisymmetry and from the so(n) bracket relations.
double generator_defect(const RepModel& model);

struct EigenGroup {
    double value = 0.0;
    int multiplicity = 0;
    Eigen::MatrixXd projector;
};

struct BModel {
    RepModel rep;
    Decomposition decomposition;
    Eigen::MatrixXd B;  // index a * dim_V + v for e_a (x) f_v
    std::vector<EigenGroup> groups;  // by decreasing eigenvalue, one per component
    double symmetry_defect = 0.0;

    int N() const { return static_cast<int>(groups.size()); }
    /// Sum of the eigen-projectors of the listed components.
    Eigen::MatrixXd projector(const OperatorSubset& S) const;
    /// Product over k != j of (B - w_k) / (w_j - w_k).
    Eigen::MatrixXd lagrange_projector(int j) const;
};

/// Throws InternalError if eigenvalues cannot be grouped into exactly N
/// clusters at the model tolerance.
BModel build_B(const RepModel& model);

struct SpectrumReport {
    double max_eigenvalue_defect = 0.0;
    bool multiplicities_match = false;
    double max_projector_defect = 0.0;  // eigen-projector vs Lagrange form
};
SpectrumReport compare_spectrum(const BModel& bm);

/// Largest |<B(a (x) v), a (x) v>| over random unit pairs.
double bzero_defect(const BModel& bm, int samples, std::uint64_t seed);

/// Atilde_0 .. Atilde_jmax as matrices.
std::vector<Eigen::MatrixXd> atilde_matrices(const BModel& bm, int jmax);

struct CTildeReport {
    double max_symmetry_defect = 0.0;    // relative to max(1, |Ctilde_j|)
    double max_corollary_defect = 0.0;   // on random decomposables
};
CTildeReport check_ctilde_symmetry(const BModel& bm, int j_max, int samples = 20, std::uint64_t seed = 7);

struct SupResult {
    double value = 0.0;  // sup of |Pi_S(a (x) v)|
    int restarts = 0;
    int total_iterations = 0;
};

/// Alternating top-eigenvector maximization of |Pi_S(a (x) v)| over unit a, v.
SupResult numeric_sup(const BModel& bm, const OperatorSubset& S, std::uint64_t seed, int restarts = 32);

/// Largest disagreement between the projection norm |Pi_j(a (x) v)|^2
/// computed from the projector, from the Atilde expansion, and from the
/// measured Q coordinates.
double projection_norm_defect(const BModel& bm, int samples, std::uint64_t seed);

}  // namespace kato
