#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kato/decomposition.hpp"
#include "kato/ellipticity.hpp"
#include "kato/numeric.hpp"

namespace kato {

/// The point Q_J of the admissible polytope where pi_j vanishes for j in J,
/// together with the value of every pi_i there.
struct VertexPoint {
    OperatorSubset J;
    std::vector<Rational> Q;  // Q_2 .. Q_M, M = |J| + 1
    std::map<int, Rational> pi_values;
};

/// Vertex for any J of size M - 1, NE member or not.
VertexPoint vertex_values(const Decomposition& d, const OperatorSubset& J);
/// Vertex for J in NE; throws ValidationError otherwise.
VertexPoint vertex(const Decomposition& d, const OperatorSubset& J);
/// Number of Q coordinates plus one: |J| + 1 for J in NE.
int vertex_degree(const Decomposition& d);

/// pi_i as an affine function of (Q_2, ..., Q_M), evaluated at `Q`.
Rational pi_affine(const Decomposition& d, int i, const std::vector<Rational>& Q);

struct EqualityCase {
    OperatorSubset vanishing_set;
    OperatorSubset gradient_set;
};

struct KatoResult {
    Rational k_squared;
    double k_decimal = 0.0;
    bool sharp = true;
    OperatorSubset extremal_J;
    EqualityCase equality_case;
    Rational min_form;  // 1 - k_squared, from the dual expression
};

/// Maximum over NE of sum_{i in complement(I) and complement(J)} pi_i(Q_J).
/// Among maximizers the lexicographically smallest J is reported, except
/// that in the properly half-integral N = 2nu+1 case a maximizer avoiding
/// nu+1 is preferred.
KatoResult kato_constant(const Decomposition& d, const OperatorSubset& I);
/// Same, reusing vertices from `ne_vertices(d)`.
KatoResult kato_constant(const Decomposition& d, const OperatorSubset& I, const std::vector<VertexPoint>& vertices);
/// Vertex of every NE member, in enumeration order.
std::vector<VertexPoint> ne_vertices(const Decomposition& d);

struct ClosedFormMatch {
    std::string pattern;
    Rational k_squared;
};

/// Every closed-form pattern that applies to (N, I), sharpened half-integral
/// N = 3 values first.
std::vector<ClosedFormMatch> closed_forms(const Decomposition& d, const OperatorSubset& I);
std::optional<Rational> closed_form(const Decomposition& d, const OperatorSubset& I);

struct HalfIntegralN3Constants {
    Rational k2_of_2;
    Rational k2_of_23;
    Rational k2_of_12;
};

/// Sharpened constants for N = 3, nu = 1, lambda = (k, ..., k) properly
/// half-integral with n odd. Throws ValidationError otherwise.
HalfIntegralN3Constants half_integral_n3_constants(const Decomposition& d);
bool is_half_integral_n3(const Decomposition& d);

struct PlusMinusConstants {
    Rational k_plus;
    Rational k_minus;
};

/// w_1 / (w_1 - largest negative w) and w_N / (w_N - smallest positive w).
/// Throws ValidationError if some conformal weight vanishes.
PlusMinusConstants p_plus_minus_constants(const Decomposition& d);
/// Indices with positive (or negative) conformal weight.
OperatorSubset positive_weight_set(const Decomposition& d);
OperatorSubset negative_weight_set(const Decomposition& d);

struct QBound {
    Rational lower;
    Rational upper;
};

/// Bounds on Q_2 .. Q_M over the admissible region.
std::vector<QBound> q_bounds(const Decomposition& d);

/// "√(3/5)"; exact "a/b" when both terms are perfect squares.
std::string sqrt_rendering(const Rational& k_squared);
std::string decimal_rendering(double value, int digits = 12);

}  // namespace kato
