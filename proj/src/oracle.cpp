#include "kato/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "kato/weights.hpp"

namespace kato {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

int ipow_int(int base, int exp) {
    int r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Digits of `code` in base n, most significant first.
std::vector<int> tuple_of(int code, int n, int p) {
    std::vector<int> t(static_cast<std::size_t>(p));
    for (int s = p - 1; s >= 0; --s) {
        t[static_cast<std::size_t>(s)] = code % n;
        code /= n;
    }
    return t;
}

int code_of(const std::vector<int>& t, int n) {
    int c = 0;
    for (int v : t) c = c * n + v;
    return c;
}

// Derivation action of e_i ^ e_j on the p-fold tensor power of R^n.
MatrixXd tensor_generator(int n, int p, int i, int j) {
    const int D = ipow_int(n, p);
    MatrixXd T = MatrixXd::Zero(D, D);
    for (int col = 0; col < D; ++col) {
        auto t = tuple_of(col, n, p);
        for (int s = 0; s < p; ++s) {
            const int k = t[static_cast<std::size_t>(s)];
            if (k == i) {
                auto u = t;
                u[static_cast<std::size_t>(s)] = j;
                T(code_of(u, n), col) += 1.0;
            }
            if (k == j) {
                auto u = t;
                u[static_cast<std::size_t>(s)] = i;
                T(code_of(u, n), col) -= 1.0;
            }
        }
    }
    return T;
}

int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a) {
        for (std::size_t b = a + 1; b < perm.size(); ++b) {
            if (perm[a] > perm[b]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

// Orthonormal basis of Lambda^p inside the p-fold tensor power.
MatrixXd exterior_basis(int n, int p) {
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == p) {
            subsets.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    const int D = ipow_int(n, p);
    MatrixXd U = MatrixXd::Zero(D, static_cast<Eigen::Index>(subsets.size()));
    double factorial = 1.0;
    for (int k = 2; k <= p; ++k) factorial *= k;
    const double scale = 1.0 / std::sqrt(factorial);
    for (std::size_t c = 0; c < subsets.size(); ++c) {
        std::vector<int> perm(static_cast<std::size_t>(p));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<int> t(static_cast<std::size_t>(p));
            for (int s = 0; s < p; ++s) t[static_cast<std::size_t>(s)] = subsets[c][static_cast<std::size_t>(perm[static_cast<std::size_t>(s)])];
            U(code_of(t, n), static_cast<Eigen::Index>(c)) += permutation_sign(perm) * scale;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return U;
}

// Orthonormal basis of trace-free symmetric 2-tensors.
MatrixXd sym2_traceless_basis(int n) {
    const int D = n * n;
    MatrixXd P = MatrixXd::Zero(D, D);
    VectorXd trace = VectorXd::Zero(D);
    for (int a = 0; a < n; ++a) {
        trace(a * n + a) = 1.0;
        for (int b = 0; b < n; ++b) {
            P(a * n + b, a * n + b) += 0.5;
            P(b * n + a, a * n + b) += 0.5;
        }
    }
    P -= trace * trace.transpose() / n;
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(P);
    const int dim = n * (n + 1) / 2 - 1;
    return es.eigenvectors().rightCols(dim);
}

VectorXd random_unit(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> g;
    VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = g(rng);
    return v / v.norm();
}

VectorXd decomposable(const VectorXd& alpha, const VectorXd& v) {
    VectorXd phi(alpha.size() * v.size());
    for (Eigen::Index a = 0; a < alpha.size(); ++a) phi.segment(a * v.size(), v.size()) = alpha(a) * v;
    return phi;
}

int sign_of_parity(int k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

MatrixXd RepModel::generator(int i, int j) const {
    if (i == j) return MatrixXd::Zero(dim_V, dim_V);
    if (i < j) return generators.at({i, j});
    return -generators.at({j, i});
}

std::string RepModel::name() const {
    switch (kind) {
        case RepKind::standard: return "standard";
        case RepKind::lambda_p: return "lambda^" + std::to_string(p);
        case RepKind::sym2_traceless: break;
    }
    return "sym2";
}

DominantWeight RepModel::symbolic_weight() const {
    std::vector<HalfInt> e(static_cast<std::size_t>(n / 2), HalfInt(0));
    switch (kind) {
        case RepKind::standard: e[0] = HalfInt(1); break;
        case RepKind::lambda_p:
            for (int s = 0; s < p; ++s) e[static_cast<std::size_t>(s)] = HalfInt(1);
            break;
        case RepKind::sym2_traceless: e[0] = HalfInt(2); break;
    }
    return DominantWeight::validate(n, std::move(e));
}

int RepModel::multiplicity_factor() const { return kind == RepKind::lambda_p && 2 * p == n ? 2 : 1; }

std::pair<RepKind, int> parse_rep_kind(const std::string& text) {
    if (text == "standard") return {RepKind::standard, 1};
    if (text == "sym2") return {RepKind::sym2_traceless, 2};
    const std::string prefix = "lambda^";
    if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size()) {
        const std::string digits = text.substr(prefix.size());
        if (std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) && digits.size() < 4) {
            return {RepKind::lambda_p, std::stoi(digits)};
        }
    }
    throw ValidationError("rep_kind", "unsupported representation '" + text + "' (standard, lambda^p, sym2)");
}

RepModel build_rep(int n, RepKind kind, int p) {
    if (n < 3) throw ValidationError("dimension", "oracle needs n >= 3");
    RepModel model;
    model.n = n;
    model.kind = kind;
    MatrixXd U;
    switch (kind) {
        case RepKind::standard:
            model.p = 1;
            U = MatrixXd::Identity(n, n);
            break;
        case RepKind::lambda_p:
            if (p < 1 || p > n / 2) {
                throw ValidationError("rep_kind", "lambda^p needs 1 <= p <= " + std::to_string(n / 2));
            }
            model.p = p;
            U = exterior_basis(n, p);
            break;
        case RepKind::sym2_traceless:
            model.p = 2;
            U = sym2_traceless_basis(n);
            break;
    }
    model.dim_V = static_cast<int>(U.cols());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            model.generators.emplace(std::make_pair(i, j), U.transpose() * tensor_generator(n, model.p, i, j) * U);
        }
    }
    return model;
}

double generator_defect(const RepModel& model) {
    const int n = model.n;
    // Bracket of the defining matrices, expanded back in the e_p ^ e_q basis.
    auto defining = [n](int i, int j) {
        MatrixXd X = MatrixXd::Zero(n, n);
        X(j, i) += 1.0;
        X(i, j) -= 1.0;
        return X;
    };
    double defect = 0.0;
    for (const auto& [key, G] : model.generators) {
        defect = std::max(defect, (G + G.transpose()).cwiseAbs().maxCoeff());
    }
    for (const auto& [k1, G1] : model.generators) {
        for (const auto& [k2, G2] : model.generators) {
            const MatrixXd C = defining(k1.first, k1.second) * defining(k2.first, k2.second) -
                               defining(k2.first, k2.second) * defining(k1.first, k1.second);
            MatrixXd expected = MatrixXd::Zero(model.dim_V, model.dim_V);
            for (int a = 0; a < n; ++a) {
                for (int b = a + 1; b < n; ++b) {
                    if (C(b, a) != 0.0) expected += C(b, a) * model.generator(a, b);
                }
            }
            defect = std::max(defect, (G1 * G2 - G2 * G1 - expected).cwiseAbs().maxCoeff());
        }
    }
    return defect;
}

MatrixXd BModel::projector(const OperatorSubset& S) const {
    const Eigen::Index D = B.rows();
    MatrixXd P = MatrixXd::Zero(D, D);
    for (int j : S) P += groups.at(static_cast<std::size_t>(j - 1)).projector;
    return P;
}

MatrixXd BModel::lagrange_projector(int j) const {
    const Eigen::Index D = B.rows();
    const double wj = to_double(decomposition.w(j));
    MatrixXd P = MatrixXd::Identity(D, D);
    for (int k = 1; k <= decomposition.N; ++k) {
        if (k == j) continue;
        const double wk = to_double(decomposition.w(k));
        P = P * (B - wk * MatrixXd::Identity(D, D)) / (wj - wk);
    }
    return P;
}

BModel build_B(const RepModel& model) {
    const int n = model.n;
    const int dV = model.dim_V;
    const int D = n * dV;
    MatrixXd B = MatrixXd::Zero(D, D);
    for (int i = 0; i < n; ++i) {
        for (int a = 0; a < n; ++a) {
            if (i != a) B.block(i * dV, a * dV, dV, dV) = model.generator(i, a);
        }
    }
    BModel bm{model, decompose(model.symbolic_weight()), B, {}, (B - B.transpose()).cwiseAbs().maxCoeff()};

    Eigen::SelfAdjointEigenSolver<MatrixXd> es(0.5 * (B + B.transpose()));
    const VectorXd& values = es.eigenvalues();
    const MatrixXd& vectors = es.eigenvectors();
    // Ascending order from the solver; walk from the top down.
    Eigen::Index hi = D - 1;
    while (hi >= 0) {
        Eigen::Index lo = hi;
        while (lo - 1 >= 0 && std::abs(values(lo - 1) - values(hi)) < model.tolerance) --lo;
        const Eigen::Index count = hi - lo + 1;
        EigenGroup g;
        g.value = values.segment(lo, count).mean();
        g.multiplicity = static_cast<int>(count);
        const MatrixXd V = vectors.middleCols(lo, count);
        g.projector = V * V.transpose();
        bm.groups.push_back(std::move(g));
        hi = lo - 1;
    }
    if (bm.N() != bm.decomposition.N) {
        throw InternalError("B has " + std::to_string(bm.N()) + " eigenvalue clusters, the decomposition has " +
                            std::to_string(bm.decomposition.N) + " components");
    }
    return bm;
}

SpectrumReport compare_spectrum(const BModel& bm) {
    SpectrumReport r;
    r.multiplicities_match = true;
    for (int j = 1; j <= bm.N(); ++j) {
        const auto& g = bm.groups[static_cast<std::size_t>(j - 1)];
        r.max_eigenvalue_defect = std::max(r.max_eigenvalue_defect, std::abs(g.value - to_double(bm.decomposition.w(j))));
        const BigInt expected = bm.decomposition.component(j).dim * bm.rep.multiplicity_factor();
        if (BigInt(g.multiplicity) != expected) r.multiplicities_match = false;
        r.max_projector_defect =
            std::max(r.max_projector_defect, (g.projector - bm.lagrange_projector(j)).cwiseAbs().maxCoeff());
    }
    return r;
}

double bzero_defect(const BModel& bm, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        const VectorXd phi = decomposable(random_unit(rng, bm.rep.n), random_unit(rng, bm.rep.dim_V));
        worst = std::max(worst, std::abs(phi.dot(bm.B * phi)));
    }
    return worst;
}

std::vector<MatrixXd> atilde_matrices(const BModel& bm, int jmax) {
    const Eigen::Index D = bm.B.rows();
    const auto wt = bm.decomposition.translated_weights();
    const MatrixXd Bt = bm.B + 0.5 * (bm.rep.n - 1) * MatrixXd::Identity(D, D);
    std::vector<MatrixXd> A;
    A.push_back(MatrixXd::Identity(D, D));
    for (int j = 1; j <= jmax; ++j) {
        const double sigma = to_double(elementary_symmetric(wt, static_cast<std::size_t>(j)));
        A.push_back(Bt * A.back() + sign_of_parity(j) * sigma * MatrixXd::Identity(D, D));
    }
    return A;
}

CTildeReport check_ctilde_symmetry(const BModel& bm, int j_max, int samples, std::uint64_t seed) {
    CTildeReport r;
    const int n = bm.rep.n;
    const int dV = bm.rep.dim_V;
    const int N = bm.decomposition.N;
    const auto A = atilde_matrices(bm, j_max + 1);
    for (int j = 0; j <= j_max; ++j) {
        MatrixXd C = A[static_cast<std::size_t>(j)];
        if (j >= 1) C += 0.25 * (sign_of_parity(N) - sign_of_parity(j)) * A[static_cast<std::size_t>(j - 1)];
        const double scale = std::max(1.0, C.cwiseAbs().maxCoeff());
        const double sign = sign_of_parity(j);
        for (int i = 0; i < n; ++i) {
            for (int a = 0; a < n; ++a) {
                const double defect =
                    (C.block(i * dV, a * dV, dV, dV) - sign * C.block(a * dV, i * dV, dV, dV)).cwiseAbs().maxCoeff();
                r.max_symmetry_defect = std::max(r.max_symmetry_defect, defect / scale);
            }
        }
    }
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        const VectorXd phi = decomposable(random_unit(rng, n), random_unit(rng, dV));
        for (int j = 0; 2 * j + 1 <= j_max + 1; ++j) {
            const MatrixXd& odd = A[static_cast<std::size_t>(2 * j + 1)];
            const MatrixXd& even = A[static_cast<std::size_t>(2 * j)];
            double value = phi.dot(odd * phi);
            if (N % 2 == 0) value += 0.5 * phi.dot(even * phi);
            const double scale = std::max({1.0, odd.cwiseAbs().maxCoeff(), even.cwiseAbs().maxCoeff()});
            r.max_corollary_defect = std::max(r.max_corollary_defect, std::abs(value) / scale);
        }
    }
    return r;
}

SupResult numeric_sup(const BModel& bm, const OperatorSubset& S, std::uint64_t seed, int restarts) {
    const int n = bm.rep.n;
    const int dV = bm.rep.dim_V;
    const MatrixXd P = bm.projector(S);
    std::mt19937_64 rng(seed);
    SupResult result;
    result.restarts = restarts;
    double best = 0.0;

    // Quadratic form in alpha for fixed v, and in v for fixed alpha.
    auto form_in_alpha = [&](const VectorXd& v) -> MatrixXd {
        MatrixXd M(n, n);
        for (int a = 0; a < n; ++a) {
            for (int b = a; b < n; ++b) {
                M(a, b) = M(b, a) = v.dot(P.block(a * dV, b * dV, dV, dV) * v);
            }
        }
        return M;
    };
    auto form_in_v = [&](const VectorXd& alpha) -> MatrixXd {
        MatrixXd M = MatrixXd::Zero(dV, dV);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                const double c = alpha(a) * alpha(b);
                if (c != 0.0) M += c * P.block(a * dV, b * dV, dV, dV);
            }
        }
        return 0.5 * (M + M.transpose());
    };
    auto top = [](const MatrixXd& M, double& value) {
        Eigen::SelfAdjointEigenSolver<MatrixXd> es(M);
        value = es.eigenvalues()(M.rows() - 1);
        return VectorXd(es.eigenvectors().col(M.rows() - 1));
    };

    for (int r = 0; r < restarts; ++r) {
        VectorXd v = random_unit(rng, dV);
        VectorXd alpha;
        double value = -1.0;
        for (int it = 0; it < 500; ++it) {
            ++result.total_iterations;
            double va = 0.0, vv = 0.0;
            alpha = top(form_in_alpha(v), va);
            v = top(form_in_v(alpha), vv);
            const bool settled = vv - value < 1e-15;
            value = vv;
            if (settled) break;
        }
        best = std::max(best, value);
    }
    result.value = std::sqrt(std::clamp(best, 0.0, 1.0));
    return result;
}

double projection_norm_defect(const BModel& bm, int samples, std::uint64_t seed) {
    const int N = bm.decomposition.N;
    const int M = (N + 1) / 2;
    const auto wt_exact = bm.decomposition.translated_weights();
    std::vector<double> wt;
    for (const auto& w : wt_exact) wt.push_back(to_double(w));
    const auto A = atilde_matrices(bm, std::max(N - 1, 2 * M - 2));
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        const VectorXd phi = decomposable(random_unit(rng, bm.rep.n), random_unit(rng, bm.rep.dim_V));
        std::vector<double> q;
        for (const auto& Ak : A) q.push_back(phi.dot(Ak * phi));
        for (int j = 1; j <= N; ++j) {
            const double wj = wt[static_cast<std::size_t>(j - 1)];
            double denom = 1.0;
            for (int k = 1; k <= N; ++k) {
                if (k != j) denom *= wj - wt[static_cast<std::size_t>(k - 1)];
            }
            const double direct = phi.dot(bm.groups[static_cast<std::size_t>(j - 1)].projector * phi);
            double expansion = 0.0;
            for (int k = 0; k <= N - 1; ++k) expansion += std::pow(wj, N - 1 - k) * q[static_cast<std::size_t>(k)];
            expansion /= denom;
            double reduced = 0.0;
            for (int k = 1; k <= M; ++k) {
                const double Qk = sign_of_parity(k - 1) * q[static_cast<std::size_t>(2 * k - 2)];
                reduced += std::pow(wj, 2 * (M - k)) * sign_of_parity(k - 1) * Qk;
            }
            if (N % 2 == 0) reduced *= wj - 0.5;
            reduced /= denom;
            worst = std::max({worst, std::abs(direct - expansion), std::abs(direct - reduced)});
        }
    }
    return worst;
}

}  // namespace kato
