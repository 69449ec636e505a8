#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kato/casimir.hpp"
#include "kato/constants.hpp"
#include "kato/decomposition.hpp"
#include "kato/ellipticity.hpp"
#include "kato/oracle.hpp"
#include "kato/tables.hpp"
#include "kato/verify.hpp"
#include "kato/weights.hpp"

namespace {

using nlohmann::ordered_json;
using namespace kato;

constexpr int kSchemaVersion = 1;

enum class Format { text, json };

struct Options {
    int n = 0;
    std::string weight;
    std::string I;
    std::string format = "text";
    std::uint64_t seed = 1;
    int rmax = 4;
    bool dim3 = false;
    bool dim4 = false;
    std::string suite = "all";
    std::string rep = "standard";

    Format fmt() const { return format == "json" ? Format::json : Format::text; }
};

// Left-justify counting code points, so the root sign takes one column.
std::string pad(const std::string& s, std::size_t width) {
    std::size_t columns = 0;
    for (unsigned char c : s) columns += (c & 0xC0) != 0x80;
    return columns >= width ? s + ' ' : s + std::string(width - columns, ' ');
}

ordered_json subset_json(const OperatorSubset& S) { return ordered_json(S); }

ordered_json subsets_json(const std::vector<OperatorSubset>& sets) {
    ordered_json a = ordered_json::array();
    for (const auto& s : sets) a.push_back(subset_json(s));
    return a;
}

std::string join_rationals(const std::vector<Rational>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += to_string(values[i]);
    }
    return out + ")";
}

void emit(const Options& opt, const ordered_json& query, const ordered_json& result, const std::string& text) {
    if (opt.fmt() == Format::json) {
        ordered_json doc;
        doc["version"] = kSchemaVersion;
        doc["query"] = query;
        doc["result"] = result;
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << text;
    }
}

Decomposition load(const Options& opt) { return decompose(parse_weight(opt.n, opt.weight)); }

ordered_json base_query(const std::string& command, const Options& opt) {
    ordered_json q;
    q["command"] = command;
    q["n"] = opt.n;
    q["weight"] = opt.weight;
    return q;
}

int cmd_decompose(const Options& opt) {
    const Decomposition d = load(opt);
    ordered_json comps = ordered_json::array();
    std::ostringstream text;
    text << "lambda = " << d.lambda.to_string() << "  n = " << d.n << "  dim V = " << d.dim_V() << '\n';
    text << "N = " << d.N << "  nu = " << d.nu << "  case " << to_string(d.case_tag) << '\n';
    text << std::left << std::setw(4) << "j" << std::setw(22) << "target" << std::setw(12) << "w" << std::setw(12)
         << "w~" << "dim\n";
    for (const auto& c : d.components) {
        ordered_json targets = ordered_json::array();
        std::string target_text;
        for (const auto& t : c.targets) {
            targets.push_back({{"label", t.label()}, {"weight", t.target_string()}});
            if (!target_text.empty()) target_text += " + ";
            target_text += t.target_string();
        }
        comps.push_back({{"j", c.j},
                         {"targets", targets},
                         {"w", to_string(c.w)},
                         {"w_tilde", to_string(c.w_tilde)},
                         {"dim", c.dim.str()}});
        text << std::setw(4) << c.j << std::setw(22) << target_text << std::setw(12) << to_string(c.w) << std::setw(12)
             << to_string(c.w_tilde) << c.dim << '\n';
    }
    text << "w = " << join_rationals(d.conformal_weights()) << '\n';
    ordered_json r;
    r["lambda"] = d.lambda.to_string();
    r["N"] = d.N;
    r["nu"] = d.nu;
    r["case"] = to_string(d.case_tag);
    r["dim_V"] = d.dim_V().str();
    r["components"] = comps;
    ordered_json w = ordered_json::array();
    for (const auto& x : d.conformal_weights()) w.push_back(to_string(x));
    r["w"] = w;
    emit(opt, base_query("decompose", opt), r, text.str());
    return 0;
}

int cmd_elliptic(const Options& opt) {
    const Decomposition d = load(opt);
    const OperatorSubset I = parse_operator_subset(opt.I, d.N);
    const auto report = is_elliptic(d, I);
    const auto minimal = minimal_elliptic_sets(d);
    const auto maximal = maximal_non_elliptic_sets(d);
    ordered_json q = base_query("elliptic", opt);
    q["I"] = subset_json(I);
    ordered_json r;
    r["N"] = d.N;
    r["elliptic"] = report.is_elliptic;
    r["witness"] = subset_json(report.witness);
    r["minimal_elliptic_sets"] = subsets_json(minimal);
    r["maximal_non_elliptic_sets"] = subsets_json(maximal);

    std::ostringstream text;
    text << "N = " << d.N << "  I = " << to_string(I) << '\n';
    text << (report.is_elliptic ? "elliptic, contains " : "not elliptic, contained in ") << to_string(report.witness)
         << '\n';
    text << "minimal elliptic:";
    for (const auto& s : minimal) text << ' ' << to_string(s);
    text << "\nmaximal non-elliptic:";
    for (const auto& s : maximal) text << ' ' << to_string(s);
    text << '\n';
    emit(opt, q, r, text.str());
    return 0;
}

int cmd_kato(const Options& opt) {
    const Decomposition d = load(opt);
    const OperatorSubset I = parse_operator_subset(opt.I, d.N);
    const auto k = kato_constant(d, I);
    const bool elliptic = is_elliptic(d, I).is_elliptic;
    const auto forms = closed_forms(d, I);

    ordered_json q = base_query("kato", opt);
    q["I"] = subset_json(I);
    ordered_json r;
    r["N"] = d.N;
    r["elliptic"] = elliptic;
    r["k_squared"] = to_string(k.k_squared);
    r["k"] = sqrt_rendering(k.k_squared);
    r["k_decimal"] = decimal_rendering(k.k_decimal);
    r["sharp"] = k.sharp;
    r["extremal_J"] = subset_json(k.extremal_J);
    r["equality_case"] = {{"vanishing_set", subset_json(k.equality_case.vanishing_set)},
                          {"gradient_set", subset_json(k.equality_case.gradient_set)}};
    ordered_json cf = ordered_json::array();
    for (const auto& f : forms) cf.push_back({{"pattern", f.pattern}, {"k_squared", to_string(f.k_squared)}});
    r["closed_forms"] = cf;

    std::ostringstream text;
    text << "N = " << d.N << "  I = " << to_string(I) << (elliptic ? "  elliptic" : "  not elliptic") << '\n';
    text << "k^2 = " << to_string(k.k_squared) << "  k = " << sqrt_rendering(k.k_squared) << " ~ "
         << decimal_rendering(k.k_decimal) << '\n';
    text << "sharp: " << (k.sharp ? "yes" : "no") << "  extremal J = " << to_string(k.extremal_J) << '\n';
    text << "equality: P_j xi = 0 for j in " << to_string(k.equality_case.vanishing_set) << ", gradient in "
         << to_string(k.equality_case.gradient_set) << '\n';
    for (const auto& f : forms) text << "closed form [" << f.pattern << "]: " << to_string(f.k_squared) << '\n';

    if (is_half_integral_n3(d)) {
        const auto h = half_integral_n3_constants(d);
        r["half_integral_n3"] = {{"k2_of_2", to_string(h.k2_of_2)},
                                 {"k2_of_23", to_string(h.k2_of_23)},
                                 {"k2_of_12", to_string(h.k2_of_12)}};
        text << "sharpened: k^2{2} = " << to_string(h.k2_of_2) << "  k^2{2,3} = " << to_string(h.k2_of_23)
             << "  k^2{1,2} = " << to_string(h.k2_of_12) << '\n';
    }
    emit(opt, q, r, text.str());
    return 0;
}

int cmd_table(const Options& opt) {
    if (opt.dim3 == opt.dim4) throw ValidationError("table", "choose exactly one of --dim3, --dim4");
    if (opt.rmax < 1 || opt.rmax > 40) throw ValidationError("rmax", "--rmax must lie in 1..40");
    const auto rows = opt.dim3 ? dim3_table(opt.rmax) : dim4_table(opt.rmax);
    ordered_json q;
    q["command"] = "table";
    q["dim"] = opt.dim3 ? 3 : 4;
    q["rmax"] = opt.rmax;
    ordered_json arr = ordered_json::array();
    std::ostringstream text;
    text << std::left << std::setw(22) << "operator" << std::setw(16) << "condition" << std::setw(4) << "r";
    if (opt.dim4) text << std::setw(4) << "s";
    text << std::setw(12) << "I" << std::setw(12) << "k^2" << std::setw(16) << "k" << std::setw(16) << "decimal"
         << "match\n";
    bool all = true;
    for (const auto& row : rows) {
        all = all && row.matches;
        ordered_json j;
        j["operator"] = row.op;
        j["condition"] = row.condition;
        j["r"] = row.r;
        if (row.s >= 0) j["s"] = row.s;
        j["weight"] = row.weight;
        j["I"] = subset_json(row.I);
        j["k_squared"] = to_string(row.k_squared);
        j["k"] = sqrt_rendering(row.k_squared);
        j["k_decimal"] = decimal_rendering(std::sqrt(to_double(row.k_squared)), 10);
        j["sharp"] = row.sharp;
        j["expected"] = to_string(row.expected);
        j["matches"] = row.matches;
        arr.push_back(j);
        text << std::setw(22) << row.op << std::setw(16) << row.condition << std::setw(4) << row.r;
        if (opt.dim4) text << std::setw(4) << row.s;
        text << std::setw(12) << to_string(row.I) << std::setw(12) << to_string(row.k_squared) << std::setw(0)
             << pad(sqrt_rendering(row.k_squared), 16) << std::setw(16)
             << decimal_rendering(std::sqrt(to_double(row.k_squared)), 10) << (row.matches ? "yes" : "NO") << '\n';
    }
    ordered_json r;
    r["rows"] = arr;
    r["all_match"] = all;
    emit(opt, q, r, text.str());
    return all ? 0 : 3;
}

int cmd_verify(const Options& opt) {
    if (opt.suite != "identities" && opt.suite != "kato" && opt.suite != "ellipticity" && opt.suite != "all") {
        throw ValidationError("suite", "unknown suite '" + opt.suite + "' (identities, kato, ellipticity, all)");
    }
    const auto reports = run_suite(opt.suite);
    ordered_json q;
    q["command"] = "verify";
    q["suite"] = opt.suite;
    ordered_json arr = ordered_json::array();
    std::ostringstream text;
    bool ok = true;
    for (const auto& rep : reports) {
        ok = ok && rep.passed();
        arr.push_back({{"name", rep.name},
                       {"checks", rep.checks},
                       {"failures", rep.failures},
                       {"passed", rep.passed()},
                       {"messages", rep.messages}});
        text << (rep.passed() ? "PASS " : "FAIL ") << std::left << std::setw(20) << rep.name << rep.checks
             << " checks, " << rep.failures << " failures\n";
        for (const auto& m : rep.messages) text << "  " << m << '\n';
    }
    ordered_json r;
    r["suites"] = arr;
    r["passed"] = ok;
    emit(opt, q, r, text.str());
    return ok ? 0 : 3;
}

int cmd_oracle(const Options& opt) {
    const auto [kind, p] = parse_rep_kind(opt.rep);
    const RepModel model = build_rep(opt.n, kind, p);
    const BModel bm = build_B(model);
    const Decomposition& d = bm.decomposition;
    const OperatorSubset I = parse_operator_subset(opt.I, d.N);
    const OperatorSubset S = complement(I, d.N);
    const auto k = kato_constant(d, I);
    const bool elliptic = is_elliptic(d, I).is_elliptic;
    const auto spectrum = compare_spectrum(bm);
    const auto ctilde = check_ctilde_symmetry(bm, 4, 20, opt.seed);
    const double bzero = bzero_defect(bm, 50, opt.seed);
    const double projection = projection_norm_defect(bm, 20, opt.seed);
    const SupResult sup = S.empty() ? SupResult{} : numeric_sup(bm, S, opt.seed);
    const double k2 = to_double(k.k_squared);
    const double num2 = sup.value * sup.value;

    ordered_json q;
    q["command"] = "oracle";
    q["n"] = opt.n;
    q["rep"] = model.name();
    q["I"] = subset_json(I);
    q["seed"] = opt.seed;
    ordered_json r;
    r["weight"] = d.lambda.to_string();
    r["dim_V"] = model.dim_V;
    r["N"] = d.N;
    r["elliptic"] = elliptic;
    ordered_json eig = ordered_json::array();
    for (int j = 1; j <= bm.N(); ++j) {
        const auto& g = bm.groups[static_cast<std::size_t>(j - 1)];
        eig.push_back({{"j", j}, {"numeric", g.value}, {"symbolic", to_string(d.w(j))}, {"multiplicity", g.multiplicity}});
    }
    r["eigenvalues"] = eig;
    r["multiplicities_match"] = spectrum.multiplicities_match;
    r["defects"] = {{"generators", generator_defect(model)},
                    {"eigenvalues", spectrum.max_eigenvalue_defect},
                    {"projectors", spectrum.max_projector_defect},
                    {"bzero", bzero},
                    {"ctilde_symmetry", ctilde.max_symmetry_defect},
                    {"ctilde_corollary", ctilde.max_corollary_defect},
                    {"projection_norms", projection}};
    r["k_squared"] = to_string(k.k_squared);
    r["k_squared_decimal"] = k2;
    r["numeric_sup"] = sup.value;
    r["numeric_sup_squared"] = num2;
    r["difference"] = std::abs(num2 - k2);
    r["restarts"] = sup.restarts;
    r["iterations"] = sup.total_iterations;

    std::ostringstream text;
    text << model.name() << " in dimension " << opt.n << ": lambda = " << d.lambda.to_string()
         << "  dim V = " << model.dim_V << "  N = " << d.N << '\n';
    for (int j = 1; j <= bm.N(); ++j) {
        const auto& g = bm.groups[static_cast<std::size_t>(j - 1)];
        text << "  w" << j << " = " << std::setw(8) << to_string(d.w(j)) << " numeric " << std::setprecision(12)
             << g.value << "  x" << g.multiplicity << '\n';
    }
    text << std::scientific << std::setprecision(2);
    text << "defects: eigen " << spectrum.max_eigenvalue_defect << "  projector " << spectrum.max_projector_defect
         << "  Bzero " << bzero << "  Ctilde " << ctilde.max_symmetry_defect << '/' << ctilde.max_corollary_defect
         << "  norms " << projection << '\n';
    text << std::defaultfloat << std::setprecision(12);
    text << "I = " << to_string(I) << (elliptic ? " (elliptic)" : " (not elliptic)") << "  k^2 = "
         << to_string(k.k_squared) << " ~ " << k2 << "  numeric " << num2 << '\n';
    emit(opt, q, r, text.str());
    return 0;
}

void add_common(CLI::App* sub, Options& opt, bool weight, bool subset) {
    sub->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    if (weight) {
        sub->add_option("--n", opt.n, "dimension n >= 3")->required();
        sub->add_option("--weight", opt.weight, "dominant weight, e.g. 2,1 or 1/2,1/2")->required();
    }
    if (subset) sub->add_option("--I", opt.I, "operator index set, e.g. 1,3")->required();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kato constants of Stein-Weiss operators on SO(n) representations"};
    app.require_subcommand(1);
    Options opt;

    auto* decompose_cmd = app.add_subcommand("decompose", "split R^n (x) V_lambda and list conformal weights");
    add_common(decompose_cmd, opt, true, false);
    auto* elliptic_cmd = app.add_subcommand("elliptic", "decide injective ellipticity of P_I");
    add_common(elliptic_cmd, opt, true, true);
    auto* kato_cmd = app.add_subcommand("kato", "optimal Kato constant of P_I");
    add_common(kato_cmd, opt, true, true);

    auto* table_cmd = app.add_subcommand("table", "dimension 3 and 4 tables of minimal elliptic operators");
    add_common(table_cmd, opt, false, false);
    table_cmd->add_flag("--dim3", opt.dim3, "dimension 3");
    table_cmd->add_flag("--dim4", opt.dim4, "dimension 4");
    table_cmd->add_option("--rmax", opt.rmax, "largest r");

    auto* verify_cmd = app.add_subcommand("verify", "run identity suites");
    add_common(verify_cmd, opt, false, false);
    verify_cmd->add_option("--suite", opt.suite, "identities, kato, ellipticity or all");

    auto* oracle_cmd = app.add_subcommand("oracle", "numerical check on an explicit tensor representation");
    add_common(oracle_cmd, opt, false, true);
    oracle_cmd->add_option("--n", opt.n, "dimension n >= 3")->required();
    oracle_cmd->add_option("--rep", opt.rep, "standard, lambda^p or sym2");
    oracle_cmd->add_option("--seed", opt.seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*decompose_cmd) return cmd_decompose(opt);
        if (*elliptic_cmd) return cmd_elliptic(opt);
        if (*kato_cmd) return cmd_kato(opt);
        if (*table_cmd) return cmd_table(opt);
        if (*verify_cmd) return cmd_verify(opt);
        if (*oracle_cmd) return cmd_oracle(opt);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << '\n';
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
