// hermloc: exact local densities, intersection numbers and verification
// identities for rank-2 hermitian lattices over a ramified quadratic
// extension of Q_p.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage error, 3 budget or precision error.

#include "hermloc/counting.hpp"
#include "hermloc/cycles.hpp"
#include "hermloc/density.hpp"
#include "hermloc/hermitian.hpp"
#include "hermloc/hironaka.hpp"
#include "hermloc/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace hermloc;

namespace {

struct Config {
    int64_t p = 3;
    std::string pi0_unit = "1";
    uint64_t budget = uint64_t(1) << 36;
    int threads = 0;
    std::string format = "json";
};

LocalField field_of(const Config& cfg) {
    return LocalField{cfg.p,
                      cfg.pi0_unit == "nonresidue" ? Pi0Unit::nonresidue : Pi0Unit::plus_one};
}

json coeffs_json(const DensityPolynomial& P) {
    json a = json::array();
    for (const Rat& c : P.coeffs()) a.push_back(rat_str(c));
    return a;
}

json outcome_json(const VerificationOutcome& o) {
    json j;
    j["name"] = o.name;
    j["parameters"] = o.parameters;
    j["lhs"] = o.lhs;
    j["rhs"] = o.rhs;
    j["pass"] = o.pass;
    return j;
}

void emit(const json& j, const Config& cfg) {
    if (cfg.format == "text") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << j.dump() << "\n";
    }
}

void emit_outcomes(const std::vector<VerificationOutcome>& v, const Config& cfg) {
    if (cfg.format == "text") {
        for (const auto& o : v)
            std::cout << (o.pass ? "pass" : "FAIL") << "  " << o.name << "  " << o.parameters
                      << "  lhs=" << o.lhs << " rhs=" << o.rhs << "\n";
    } else {
        json arr = json::array();
        for (const auto& o : v) arr.push_back(outcome_json(o));
        std::cout << arr.dump() << "\n";
    }
}

int64_t env_i64(const char* name, int64_t fallback) {
    const char* v = std::getenv(name);
    return v ? std::stoll(v) : fallback;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact hermitian local densities over ramified p-adic extensions"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    cfg.budget = static_cast<uint64_t>(env_i64("HERMLOC_BUDGET", int64_t(cfg.budget)));
    cfg.threads = static_cast<int>(env_i64("HERMLOC_THREADS", 0));
    app.add_option("--format", cfg.format, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--budget", cfg.budget, "max candidate evaluations for counting");
    app.add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
    app.add_option("--pi0-unit", cfg.pi0_unit, "unit class of pi0: 1|nonresidue")
        ->check(CLI::IsMember({"1", "nonresidue"}));

    // density
    auto* cd = app.add_subcommand("density", "closed-form density polynomial alpha(S,T,X)");
    int64_t d_q = 3;
    std::string d_form = "diag", d_s = "split";
    int d_a = 0, d_b = 0, d_eps1 = 1;
    cd->add_option("--q", d_q, "residue cardinality (prime power >= 3)")->required();
    cd->add_option("--form", d_form)->check(CLI::IsMember({"diag", "anti"}))->required();
    cd->add_option("--a", d_a)->required();
    cd->add_option("--b", d_b);
    cd->add_option("--eps1", d_eps1)->check(CLI::IsMember({1, -1}));
    cd->add_option("--s", d_s)->check(CLI::IsMember({"split", "nonsplit", "hyperbolic"}))
        ->required();

    // count
    auto* cc = app.add_subcommand("count", "brute-force representation count and density");
    int64_t c_p = 3;
    int c_ell = 1;
    std::string c_S, c_T, c_conv = "hermdual";
    cc->add_option("--p", c_p, "odd prime")->required();
    cc->add_option("--ell", c_ell, "congruence level")->required();
    cc->add_option("--S", c_S, "Gram matrix of S (grammar)")->required();
    cc->add_option("--T", c_T, "Gram matrix of T (grammar)")->required();
    cc->add_option("--convention", c_conv)->check(CLI::IsMember({"herm", "hermdual"}));

    // mu
    auto* cm = app.add_subcommand("mu", "intersection number mu_q(T)");
    int64_t m_q = 3;
    int m_a = 0, m_b = 0;
    cm->add_option("--q", m_q)->required();
    cm->add_option("--a", m_a)->required();
    cm->add_option("--b", m_b)->required();

    // normalize
    auto* cn = app.add_subcommand("normalize", "canonical form of a Gram matrix");
    int64_t n_p = 3;
    std::string n_gram;
    cn->add_option("--p", n_p, "odd prime")->required();
    cn->add_option("--gram", n_gram, "Gram matrix (grammar)")->required();

    // decompose
    auto* cde = app.add_subcommand("decompose", "special-cycle decomposition");
    int de_a = 0;
    cde->add_option("--a", de_a)->required();

    // assemble
    auto* ca = app.add_subcommand("assemble", "I+II+III intersection assembly");
    int64_t a_q = 3;
    int a_a = 0, a_b = 0;
    ca->add_option("--q", a_q)->required();
    ca->add_option("--a", a_a)->required();
    ca->add_option("--b", a_b)->required();

    // verify
    auto* cv = app.add_subcommand("verify", "verification suites");
    std::string v_suite;
    cv->add_option("suite", v_suite, "kr|interpolation|hironaka|recursion|assembly|lifting")
        ->required();
    std::vector<int64_t> v_qset;
    int v_amax = -1, v_ell = 1, v_r = 1;
    int64_t v_p = 3;
    cv->add_option("--q-set", v_qset, "q values (comma separated)")->delimiter(',');
    cv->add_option("--a-max", v_amax, "grid bound (a_max / inv_max / ab_max)");
    cv->add_option("--p", v_p, "prime for oracle-backed suites");
    cv->add_option("--ell", v_ell, "congruence level for interpolation");
    cv->add_option("--r", v_r, "hyperbolic padding for interpolation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cd->parsed()) {
            CanonicalForm T = d_form == "diag" ? CanonicalForm::diag(d_a, d_b, d_eps1)
                                               : CanonicalForm::anti(d_a);
            SType s = d_s == "split" ? SType::split
                                     : d_s == "nonsplit" ? SType::nonsplit : SType::hyperbolic;
            DensityPolynomial P = alpha_poly(d_q, T, s);
            json j;
            j["q"] = d_q;
            j["form"] = d_form;
            j["coeffs"] = coeffs_json(P);
            j["value_at_1"] = rat_str(P.eval(1));
            j["alpha_prime"] = rat_str(-P.derivative_at_one());
            emit(j, cfg);
        } else if (cc->parsed()) {
            cfg.p = c_p;
            LocalField fld = field_of(cfg);
            int prec = c_ell + 5;
            GramMatrix S = parse_gram(c_S, fld, prec);
            GramMatrix T = parse_gram(c_T, fld, prec);
            DualConvention conv =
                c_conv == "herm" ? DualConvention::herm : DualConvention::hermdual;
            CountJob job{S, T, c_ell, conv, cfg.budget, cfg.threads, 0};
            uint64_t cnt = count_representations(job);
            Rat alpha = alpha_bruteforce(job);
            // stabilization: does the next level reproduce the same density?
            bool stable = false;
            try {
                CountJob next{S, T, c_ell + 1, conv, cfg.budget, cfg.threads, 0};
                stable = alpha_bruteforce(next) == alpha;
            } catch (const budget_error&) {
                stable = false;
            }
            json j;
            j["count"] = std::to_string(cnt);
            j["normalized_alpha"] = rat_str(alpha);
            j["ell"] = c_ell;
            j["stable"] = stable;
            emit(j, cfg);
        } else if (cm->parsed()) {
            json j;
            j["mu"] = mu_q(m_q, m_a, m_b).str();
            emit(j, cfg);
        } else if (cn->parsed()) {
            cfg.p = n_p;
            LocalField fld = field_of(cfg);
            GramMatrix T = parse_gram(n_gram, fld, 10);
            CanonicalForm cf = normalize(T);
            auto [i1, i2] = fundamental_invariant(cf);
            json j;
            j["form"] = cf.is_diagonal() ? "diag" : "anti";
            j["a"] = cf.a;
            j["b"] = cf.is_diagonal() ? cf.b : cf.a;
            j["eps1"] = cf.is_diagonal() ? cf.eps1 : 1;
            j["fundamental_invariant"] = json::array({i1, i2});
            j["chi"] = chi_of(cf);
            emit(j, cfg);
        } else if (cde->parsed()) {
            json arr = json::array();
            for (const CycleComponent& c : decompose_special_cycle(de_a)) {
                json j;
                j["kind"] = c.kind == CycleComponent::Kind::z0 ? "Z0"
                            : c.kind == CycleComponent::Kind::zs_plus  ? "Zs+"
                            : c.kind == CycleComponent::Kind::zs_minus ? "Zs-"
                                                                       : "Exc";
                j["s"] = c.s;
                j["multiplicity"] = c.multiplicity;
                arr.push_back(j);
            }
            emit(arr, cfg);
        } else if (ca->parsed()) {
            IntersectionReport rep = assemble_intersection(a_q, a_a, a_b);
            json j;
            j["q"] = a_q;
            j["a"] = a_a;
            j["b"] = a_b;
            json pt = json::array();
            for (const auto& [key, val] : rep.pair_table) {
                json row;
                row["x"] = rep.components_x[key.first].str();
                row["y"] = rep.components_y[key.second].str();
                row["value"] = val.str();
                pt.push_back(row);
            }
            j["pair_table"] = pt;
            j["I"] = rep.I.str();
            j["II"] = rep.II.str();
            j["III"] = rep.III.str();
            j["total"] = rep.total.str();
            j["mu"] = mu_q(a_q, a_a, a_b).str();
            emit(j, cfg);
        } else if (cv->parsed()) {
            std::vector<VerificationOutcome> out;
            if (v_suite == "kr") {
                if (v_qset.empty()) v_qset = {3, 4, 5, 7, 9, 11, 13};
                out = verify_kr(v_qset, v_amax < 0 ? 10 : v_amax);
            } else if (v_suite == "hironaka") {
                if (v_qset.empty()) v_qset = {3, 5, 7};
                out = verify_hironaka(v_qset, v_amax < 0 ? 6 : v_amax);
            } else if (v_suite == "recursion") {
                if (v_qset.empty()) v_qset = {3, 5, 7};
                out = verify_recursion_suite(v_qset, v_amax < 0 ? 13 : v_amax);
            } else if (v_suite == "assembly") {
                if (v_qset.empty()) v_qset = {3, 4, 5, 7, 9};
                out = verify_assembly(v_qset, v_amax < 0 ? 12 : v_amax);
            } else if (v_suite == "lifting") {
                if (v_qset.empty()) v_qset = {3, 5};
                out = verify_lifting(v_qset, v_amax < 0 ? 6 : v_amax, 10);
            } else if (v_suite == "interpolation") {
                std::vector<CanonicalForm> forms = {CanonicalForm::diag(0, 0, 1),
                                                    CanonicalForm::diag(0, 0, -1),
                                                    CanonicalForm::anti(0)};
                out = verify_interpolation(v_p, v_ell, v_r, forms, cfg.budget, cfg.threads);
            } else {
                std::cerr << "unknown suite: " << v_suite << "\n";
                return 2;
            }
            emit_outcomes(out, cfg);
            return all_pass(out) ? 0 : 1;
        }
    } catch (const budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const precision_error& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
