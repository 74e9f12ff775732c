#include <omp.h>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ehrlimit/combinators.hpp"
#include "ehrlimit/family.hpp"
#include "ehrlimit/limits.hpp"
#include "ehrlimit/oracle.hpp"
#include "ehrlimit/simplex.hpp"
#include "ehrlimit/verify.hpp"

namespace {

using namespace ehrlimit;

constexpr int kExitUsage = 2;
constexpr int kExitForm = 3;
constexpr int kExitUnstable = 4;
constexpr int kExitBudget = 5;
constexpr int kExitOracleGuard = 6;

struct FamilyArgs {
    std::string family;
    std::string matrix_path;
    long m = -1;
    long d = -1;
    long n = -1;
    std::vector<long> a;
    std::vector<long> q;
};

void add_family_options(CLI::App* cmd, FamilyArgs& fa, bool with_matrix) {
    auto* family = cmd->add_option("--family", fa.family,
                                   "family name: S, delta1q, qn, bidiagonal, multidiagonal, crosspolytope");
    if (with_matrix) {
        auto* matrix = cmd->add_option("--matrix", fa.matrix_path,
                                       "simplex file (JSON or column matrix text)");
        matrix->excludes(family);
    }
    cmd->add_option("--m", fa.m, "bidiagonal parameter m");
    cmd->add_option("--d", fa.d, "dimension parameter d");
    cmd->add_option("--n", fa.n, "q(n) parameter n");
    cmd->add_option("--a", fa.a, "multidiagonal band a_1,a_2,..")->delimiter(',');
    cmd->add_option("--q", fa.q, "weight vector q_1,q_2,..")->delimiter(',');
}

long require_param(long v, const char* name) {
    if (v < 0) throw std::invalid_argument(std::string("missing required parameter ") + name);
    return v;
}

FamilySpec family_spec_of(const FamilyArgs& fa) {
    if (fa.family == "S") return FamilySpec::S();
    if (fa.family == "qn") return FamilySpec::qn();
    if (fa.family == "bidiagonal") return FamilySpec::bidiag(require_param(fa.m, "--m"));
    if (fa.family == "multidiagonal") {
        if (fa.a.empty()) throw std::invalid_argument("missing required parameter --a");
        return FamilySpec::multidiag(fa.a);
    }
    if (fa.family == "crosspolytope") return FamilySpec::cross();
    if (fa.family == "delta1q") {
        if (fa.q.empty()) throw std::invalid_argument("missing required parameter --q");
        return FamilySpec::delta(fa.q);
    }
    throw std::invalid_argument("unknown family: " + fa.family);
}

// Schedule parameter for a single family member.
long member_param(const FamilySpec& spec, const FamilyArgs& fa) {
    switch (spec.kind) {
        case FamilyKind::q_of_n: return require_param(fa.n, "--n");
        case FamilyKind::delta_one_q: return 0;
        default: return require_param(fa.d, "--d");
    }
}

struct MemberHstar {
    IntPolynomial h;
    long dim = 0;
    Int volume;
};

MemberHstar member_hstar(const FamilyArgs& fa, const HstarOptions& opts) {
    MemberHstar out;
    if (!fa.matrix_path.empty()) {
        LatticeSimplex s = read_simplex_file(fa.matrix_path);
        out.h = hstar(s, opts);
        out.dim = s.dim();
        out.volume = s.normalized_volume();
        return out;
    }
    FamilySpec spec = family_spec_of(fa);
    long param = member_param(spec, fa);
    out.h = family_member_hstar(spec, param, opts);
    out.volume = out.h.sum();
    switch (spec.kind) {
        case FamilyKind::standard_reflexive:
        case FamilyKind::crosspolytope: out.dim = param; break;
        case FamilyKind::q_of_n: out.dim = 2 * param + 2; break;
        case FamilyKind::bidiagonal: out.dim = param - 1; break;
        case FamilyKind::multidiagonal: out.dim = param; break;
        case FamilyKind::delta_one_q: out.dim = static_cast<long>(spec.q.size()); break;
    }
    return out;
}

long simplex_dim(const FamilyArgs& fa) {
    if (!fa.matrix_path.empty()) return read_simplex_file(fa.matrix_path).dim();
    FamilySpec spec = family_spec_of(fa);
    long param = member_param(spec, fa);
    switch (spec.kind) {
        case FamilyKind::bidiagonal: return param - 1;
        case FamilyKind::q_of_n: return 2 * param + 2;
        case FamilyKind::delta_one_q: return static_cast<long>(spec.q.size());
        default: return param;
    }
}

Int budget_from(std::optional<long> flag) {
    if (flag) return Int(*flag);
    if (const char* env = std::getenv("EHRLIMIT_BUDGET")) return Int(env);
    return HstarOptions::default_budget();
}

std::string plain_coeffs(const std::vector<Int>& cs) {
    std::string out;
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i) out += ' ';
        out += cs[i].get_str();
    }
    return out;
}

int cmd_hstar(const FamilyArgs& fa, bool json, const HstarOptions& opts) {
    MemberHstar r = member_hstar(fa, opts);
    if (json) {
        nlohmann::ordered_json j;
        nlohmann::ordered_json cs = nlohmann::ordered_json::array();
        for (const Int& c : r.h.coeffs()) cs.push_back(to_long(c, "coefficient"));
        j["hstar"] = std::move(cs);
        j["dim"] = r.dim;
        j["volume"] = to_long(r.volume, "volume");
        std::cout << j.dump() << "\n";
    } else {
        std::cout << plain_coeffs(r.h.coeffs()) << "\n";
    }
    return 0;
}

int cmd_limit(const FamilyArgs& fa, long degree, const std::string& mode, long window, long d_max,
              const LimitOptions& opts) {
    FamilySpec spec = family_spec_of(fa);
    LimitReport report;
    if (mode == "certified")
        report = limit_prefix_certified(spec, degree, opts);
    else if (mode == "empirical")
        report = stabilize_empirical(spec, degree, window, d_max, opts);
    else
        throw std::invalid_argument("mode must be certified or empirical");
    std::cout << limit_report_json(report).dump() << "\n";
    return report.stabilized ? 0 : kExitUnstable;
}

int cmd_verify(const std::string& suite, const verify::SuiteParams& params) {
    auto results = verify::run_suite(suite, params);
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "ok   - " : "FAIL - ") << r.name;
        if (!r.detail.empty()) std::cout << " [" << r.detail << "]";
        std::cout << "\n";
        all = all && r.pass;
    }
    std::cout << (all ? "pass" : "fail") << "\n";
    return all ? 0 : 1;
}

int cmd_oracle(const FamilyArgs& fa, long t_max, const HstarOptions& opts) {
    if (t_max > 6 || simplex_dim(fa) > 7) {
        std::cerr << "oracle: refused (dimension > 7 or T > 6 is beyond the brute-force scale guard)\n";
        return kExitOracleGuard;
    }
    SeriesPrefix counted;
    IntPolynomial h;
    long dim = 0;
    if (!fa.matrix_path.empty()) {
        LatticeSimplex s = read_simplex_file(fa.matrix_path);
        counted = ehrhart_prefix_by_counting(s, t_max);
        h = hstar(s, opts);
        dim = s.dim();
    } else {
        FamilySpec spec = family_spec_of(fa);
        long param = member_param(spec, fa);
        if (spec.kind == FamilyKind::crosspolytope) {
            VertexPolytope x = make_crosspolytope(param);
            counted = ehrhart_prefix_by_counting(x, t_max);
            h = hstar(x, opts);
            dim = x.dim();
        } else {
            LatticeSimplex s = [&] {
                switch (spec.kind) {
                    case FamilyKind::standard_reflexive: return make_S(param);
                    case FamilyKind::q_of_n: return make_q_of_n(param);
                    case FamilyKind::bidiagonal: return make_bidiagonal(spec.m, param);
                    case FamilyKind::multidiagonal: return make_multidiagonal(spec.a, param);
                    default: {
                        std::vector<Int> qi(spec.q.begin(), spec.q.end());
                        return make_delta_one_q(qi);
                    }
                }
            }();
            counted = ehrhart_prefix_by_counting(s, t_max);
            h = hstar(s, opts);
            dim = s.dim();
        }
    }
    bool consistent = prefix_agree(counted, expand_rational_prefix(h, dim + 1, t_max), t_max);
    std::cout << plain_coeffs(counted.coeffs) << (consistent ? " consistent" : " inconsistent") << "\n";
    return consistent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ehrhart h*-polynomials and Ehrhart limits of lattice simplices"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: all available)");

    FamilyArgs hstar_fa;
    bool hstar_json = false;
    std::optional<long> hstar_budget;
    auto* hs = app.add_subcommand("hstar", "h*-polynomial of a family member or matrix simplex");
    add_family_options(hs, hstar_fa, true);
    hs->add_flag("--json", hstar_json, "JSON output");
    hs->add_option("--budget", hstar_budget, "enumeration point budget");

    FamilyArgs limit_fa;
    long limit_degree = 0, limit_window = 3, limit_dmax = 32;
    std::string limit_mode;
    std::optional<long> limit_budget;
    auto* lm = app.add_subcommand("limit", "certified or empirical Ehrhart-limit prefix");
    add_family_options(lm, limit_fa, false);
    lm->add_option("--degree", limit_degree, "prefix degree r")->required();
    lm->add_option("--mode", limit_mode, "certified | empirical")->required();
    lm->add_option("--window", limit_window, "empirical agreement window (default 3)");
    lm->add_option("--d-max", limit_dmax, "empirical schedule bound (default 32)");
    lm->add_option("--budget", limit_budget, "enumeration point budget");

    std::string verify_suite;
    verify::SuiteParams verify_params;
    auto* vf = app.add_subcommand("verify", "run a named desk-scale verification suite");
    vf->add_option("suite", verify_suite, "one of: eq1-consistency freesum-product join-product pyramid-invariance m2-closedform lemma-powers fkh-census jacobsthal recursion height-bounds")->required();
    vf->add_option("--max", verify_params.max, "range bound");
    vf->add_option("--d", verify_params.d, "dimension");
    vf->add_option("--t-max", verify_params.t_max, "dilate bound");

    FamilyArgs oracle_fa;
    long oracle_tmax = 3;
    auto* oc = app.add_subcommand("oracle", "brute-force dilate counts and consistency verdict");
    add_family_options(oc, oracle_fa, true);
    oc->add_option("--t-max", oracle_tmax, "largest dilate (default 3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    if (threads > 0) omp_set_num_threads(threads);

    try {
        if (hs->parsed()) {
            HstarOptions opts{budget_from(hstar_budget), threads};
            return cmd_hstar(hstar_fa, hstar_json, opts);
        }
        if (lm->parsed()) {
            LimitOptions opts{budget_from(limit_budget), threads};
            return cmd_limit(limit_fa, limit_degree, limit_mode, limit_window, limit_dmax, opts);
        }
        if (vf->parsed()) return cmd_verify(verify_suite, verify_params);
        if (oc->parsed()) {
            HstarOptions opts{budget_from(std::nullopt), threads};
            return cmd_oracle(oracle_fa, oracle_tmax, opts);
        }
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const UnsupportedFormError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitForm;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
