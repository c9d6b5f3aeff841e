// psilcm: exact and simulated statistics of psi(A) = log lcm(A) for subsets
// of {1,...,n}, plus extremal and polynomial-set constructions.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "psilcm/asymptotics.hpp"
#include "psilcm/exact_moments.hpp"
#include "psilcm/extremal.hpp"
#include "psilcm/oracle.hpp"
#include "psilcm/poly.hpp"
#include "psilcm/psi.hpp"
#include "psilcm/random_models.hpp"
#include "psilcm/suite.hpp"

using json = nlohmann::json;
using namespace psilcm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

struct Output {
    bool as_json = false;

    void emit(const std::vector<std::pair<std::string, std::string>>& fields) const {
        if (as_json) {
            json j;
            j["schema_version"] = 1;
            for (const auto& [k, v] : fields) {
                // numbers stay numbers in JSON when they parse as such
                try {
                    std::size_t pos = 0;
                    double d = std::stod(v, &pos);
                    if (pos == v.size()) {
                        j[k] = d;
                        continue;
                    }
                } catch (...) {
                }
                j[k] = v;
            }
            std::cout << j.dump() << "\n";
        } else {
            std::string header, row;
            for (const auto& [k, v] : fields) {
                if (!header.empty()) {
                    header += ',';
                    row += ',';
                }
                header += k;
                row += v;
            }
            std::cout << header << "\n" << row << "\n";
        }
    }
};

void emit_moment_report(const Output& out, const MomentReport& r) {
    out.emit({{"n", std::to_string(r.n)},
              {"delta_or_k", num(r.delta_or_k)},
              {"expectation", num(r.expectation)},
              {"second_moment", r.second_moment ? num(*r.second_moment) : ""},
              {"variance", r.variance ? num(*r.variance) : ""},
              {"method", r.method}});
}

std::string join_set(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::uint64_t a : v) {
        if (!s.empty()) s += ' ';
        s += std::to_string(a);
    }
    return s;
}

PrimeTable make_table(std::uint64_t needed, std::uint64_t limit_flag) {
    return build_prime_table(std::max<std::uint64_t>(limit_flag ? limit_flag : needed, 2));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "psilcm: statistics of the log-lcm of integer subsets.\n"
        "All commands print CSV (header + row) by default; --json emits one JSON\n"
        "object with a schema_version field instead. Floating point uses 9\n"
        "significant digits."};
    app.require_subcommand(1);

    Output out;
    std::uint64_t limit_flag = 0;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    app.add_flag("--json", out.as_json, "emit JSON objects instead of CSV");
    app.add_option("--limit", limit_flag, "sieve limit (default: max n the command needs)");
    app.add_option("--seed", seed, "RNG seed for sampling commands (default 0)");
    app.add_option("--threads", threads, "worker threads, 0 = auto (results are invariant)");

    int rc = kExitOk;

    // sieve --limit N --stats
    auto* sieve_cmd = app.add_subcommand("sieve", "prime table statistics: pi(N), psi(N)");
    std::uint64_t sieve_limit = 0;
    bool sieve_stats = false;
    sieve_cmd->add_option("--limit", sieve_limit, "sieve bound N")->required();
    sieve_cmd->add_flag("--stats", sieve_stats, "print pi(N) and psi(N)");
    sieve_cmd->callback([&] {
        PrimeTable t = build_prime_table(sieve_limit);
        out.emit({{"limit", std::to_string(sieve_limit)},
                  {"pi", std::to_string(t.prime_count(sieve_limit))},
                  {"psi", num(t.chebyshev_psi(sieve_limit))}});
    });

    // psi --n N --input FILE
    auto* psi_cmd = app.add_subcommand("psi", "psi(A) for a set read from a file");
    std::uint64_t psi_n = 0;
    std::string psi_input;
    psi_cmd->add_option("--n", psi_n, "ambient bound n")->required();
    psi_cmd->add_option("--input", psi_input, "set file (integers, # comments)")->required();
    psi_cmd->callback([&] {
        std::ifstream in(psi_input);
        if (!in) throw CLI::ValidationError("psi", "cannot open " + psi_input);
        IntegerSet A = IntegerSet::parse(psi_n, in);
        PrimeTable t = make_table(psi_n, limit_flag);
        out.emit({{"n", std::to_string(psi_n)},
                  {"size", std::to_string(A.size())},
                  {"psi", num(psi_of_set(A, t))}});
    });

    // expect --n N --delta D [--method direct|grouped]
    auto* expect_cmd = app.add_subcommand("expect", "exact E(psi) in S(n;delta)");
    std::uint64_t em_n = 0;
    double em_delta = 0.0;
    std::string em_method = "direct";
    expect_cmd->add_option("--n", em_n)->required();
    expect_cmd->add_option("--delta", em_delta)->required();
    expect_cmd->add_option("--method", em_method)
        ->check(CLI::IsMember({"direct", "grouped"}));
    expect_cmd->callback([&] {
        PrimeTable t = make_table(em_n, limit_flag);
        MomentReport r;
        r.n = em_n;
        r.delta_or_k = em_delta;
        r.method = em_method;
        r.expectation = em_method == "direct" ? expectation_bernoulli_direct(em_n, em_delta, t)
                                              : expectation_bernoulli_grouped(em_n, em_delta, t);
        emit_moment_report(out, r);
    });

    // variance --n N --delta D [--cap C]
    auto* var_cmd = app.add_subcommand("variance", "exact V(psi) in S(n;delta), pairwise sum");
    std::uint64_t v_n = 0;
    double v_delta = 0.0;
    std::uint64_t v_cap = 30'000;
    var_cmd->add_option("--n", v_n)->required();
    var_cmd->add_option("--delta", v_delta)->required();
    var_cmd->add_option("--cap", v_cap, "pairwise exact cap (default 30000)");
    var_cmd->callback([&] {
        PrimeTable t = make_table(v_n, limit_flag);
        MomentReport r;
        r.n = v_n;
        r.delta_or_k = v_delta;
        r.method = "pairwise";
        r.expectation = expectation_bernoulli_direct(v_n, v_delta, t);
        r.variance = variance_bernoulli_exact(v_n, v_delta, t, v_cap);
        r.second_moment = *r.variance + r.expectation * r.expectation;
        emit_moment_report(out, r);
    });

    // meank --n N --k K [--second-moment] [--cap C]
    auto* meank_cmd = app.add_subcommand("meank", "exact mean of psi over size-k subsets");
    std::uint64_t mk_n = 0, mk_k = 0, mk_cap = 5'000;
    bool mk_second = false;
    meank_cmd->add_option("--n", mk_n)->required();
    meank_cmd->add_option("--k", mk_k)->required();
    meank_cmd->add_flag("--second-moment", mk_second, "also compute the exact second moment");
    meank_cmd->add_option("--cap", mk_cap, "pairwise cap for the second moment (default 5000)");
    meank_cmd->callback([&] {
        PrimeTable t = make_table(mk_n, limit_flag);
        MomentReport r;
        r.n = mk_n;
        r.delta_or_k = static_cast<double>(mk_k);
        r.method = "direct";
        r.expectation = expectation_uniform_k(mk_n, mk_k, t);
        if (mk_second) {
            r.second_moment = second_moment_uniform_k(mk_n, mk_k, t, mk_cap);
            r.derive_variance();
        }
        emit_moment_report(out, r);
    });

    // sample --model bernoulli|uniform-k --n N [--delta D | --k K] --trials T
    auto* sample_cmd = app.add_subcommand("sample", "Monte Carlo psi statistics");
    std::string sm_model = "bernoulli";
    std::uint64_t sm_n = 0, sm_k = 0, sm_trials = 100;
    double sm_delta = 0.5;
    std::string sm_dump;
    sample_cmd->add_option("--model", sm_model)->check(CLI::IsMember({"bernoulli", "uniform-k"}));
    sample_cmd->add_option("--n", sm_n)->required();
    sample_cmd->add_option("--delta", sm_delta, "inclusion probability (bernoulli)");
    sample_cmd->add_option("--k", sm_k, "subset size (uniform-k)");
    sample_cmd->add_option("--trials", sm_trials);
    sample_cmd->add_option("--dump-psis", sm_dump, "write one psi per line to FILE");
    sample_cmd->callback([&] {
        PrimeTable t = make_table(sm_n, limit_flag);
        RandomModel m = sm_model == "bernoulli" ? RandomModel(BernoulliModel{sm_n, sm_delta})
                                                : RandomModel(UniformKModel{sm_n, sm_k});
        SampleStats s = montecarlo_psi(m, sm_trials, seed, t);
        if (!sm_dump.empty()) {
            std::ofstream f(sm_dump);
            for (double p : montecarlo_psis(m, sm_trials, seed, t)) f << num(p) << "\n";
        }
        out.emit({{"model", sm_model},
                  {"n", std::to_string(sm_n)},
                  {"param", sm_model == "bernoulli" ? num(sm_delta) : std::to_string(sm_k)},
                  {"trials", std::to_string(s.trials)},
                  {"seed", std::to_string(seed)},
                  {"mean_psi", num(s.mean_psi)},
                  {"var_psi", num(s.var_psi)},
                  {"mean_size", num(s.mean_size)},
                  {"q05", num(s.quantiles[0].second)},
                  {"q50", num(s.quantiles[1].second)},
                  {"q95", num(s.quantiles[2].second)},
                  {"degenerate", s.degenerate ? "1" : "0"}});
    });

    // oracle --n N [--delta D | --k K] [--extremal]
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force enumeration ground truth");
    std::uint64_t or_n = 0;
    std::optional<double> or_delta;
    std::optional<std::uint64_t> or_k;
    bool or_extremal = false;
    oracle_cmd->add_option("--n", or_n)->required();
    oracle_cmd->add_option("--delta", or_delta);
    oracle_cmd->add_option("--k", or_k);
    oracle_cmd->add_flag("--extremal", or_extremal, "exhaustive min/max psi over size-k subsets");
    oracle_cmd->callback([&] {
        PrimeTable t = make_table(std::max<std::uint64_t>(or_n, 2), limit_flag);
        if (or_extremal) {
            if (!or_k) throw CLI::ValidationError("oracle", "--extremal requires --k");
            auto e = oracle::extremal_psi_exhaustive(or_n, *or_k, t);
            out.emit({{"n", std::to_string(or_n)},
                      {"k", std::to_string(*or_k)},
                      {"min_psi", num(e.min_psi)},
                      {"argmin", join_set(e.argmin)},
                      {"max_psi", num(e.max_psi)},
                      {"argmax", join_set(e.argmax)}});
        } else if (or_delta) {
            auto [e, v] = oracle::enumerate_bernoulli_moments(or_n, *or_delta, t);
            MomentReport r;
            r.n = or_n;
            r.delta_or_k = *or_delta;
            r.method = "oracle";
            r.expectation = e;
            r.variance = v;
            r.second_moment = v + e * e;
            emit_moment_report(out, r);
        } else if (or_k) {
            auto [m1, m2] = oracle::enumerate_uniform_k_moments(or_n, *or_k, t);
            MomentReport r;
            r.n = or_n;
            r.delta_or_k = static_cast<double>(*or_k);
            r.method = "oracle";
            r.expectation = m1;
            r.second_moment = m2;
            r.derive_variance();
            emit_moment_report(out, r);
        } else {
            throw CLI::ValidationError("oracle", "need --delta or --k");
        }
    });

    // extremal --n N --k K --kind smooth|primes [--report-bounds --theta T --c C] [--output F]
    auto* ext_cmd = app.add_subcommand("extremal", "extremal set constructions");
    std::uint64_t ex_n = 0, ex_k = 0;
    std::string ex_kind;
    bool ex_bounds = false;
    double ex_theta = 0.5, ex_c = 1.0;
    std::string ex_output;
    ext_cmd->add_option("--n", ex_n)->required();
    ext_cmd->add_option("--k", ex_k)->required();
    ext_cmd->add_option("--kind", ex_kind)->required()->check(CLI::IsMember({"smooth", "primes"}));
    ext_cmd->add_flag("--report-bounds", ex_bounds, "also print the reference bound envelopes");
    ext_cmd->add_option("--theta", ex_theta);
    ext_cmd->add_option("--c", ex_c);
    ext_cmd->add_option("--output", ex_output, "write the set elements to FILE");
    ext_cmd->callback([&] {
        PrimeTable t = make_table(ex_n, limit_flag);
        IntegerSet A(1, {});
        std::uint64_t y = 0;
        double t_eff = 0.0;
        if (ex_kind == "smooth") {
            auto [set, spec] = build_smooth_set(ex_n, ex_k, t);
            A = set;
            y = spec.y;
            t_eff = spec.t_effective;
        } else {
            A = build_prime_tail_set(ex_n, ex_k, t);
        }
        if (!ex_output.empty()) {
            std::ofstream f(ex_output);
            for (std::uint64_t a : A.elements()) f << a << "\n";
        }
        std::vector<std::pair<std::string, std::string>> fields = {
            {"n", std::to_string(ex_n)},
            {"k", std::to_string(ex_k)},
            {"kind", ex_kind},
            {"psi", num(psi_of_set(A, t))},
            {"y", std::to_string(y)},
            {"t_effective", num(t_eff)}};
        if (ex_bounds) {
            auto b = extremal_bounds(ex_n, ex_theta, ex_c);
            fields.emplace_back("max_lower_bound", num(b.max_lower_bound));
            fields.emplace_back("min_upper_bound", num(b.min_upper_bound));
        }
        out.emit(fields);
    });

    // poly --coeffs "a0,a1,...,ad" --n N [--predict] [--estimate-B P]
    auto* poly_cmd = app.add_subcommand("poly", "psi of polynomial value sets A_f(n)");
    std::string po_coeffs;
    std::uint64_t po_n = 0, po_bcap = 0;
    bool po_predict = false;
    poly_cmd->add_option("--coeffs", po_coeffs, "a0,a1,...,ad (constant term first)")->required();
    poly_cmd->add_option("--n", po_n)->required();
    poly_cmd->add_flag("--predict", po_predict, "also evaluate the applicable predictors");
    poly_cmd->add_option("--estimate-B", po_bcap, "truncated series for the x^2+1 constant B");
    poly_cmd->callback([&] {
        std::vector<std::int64_t> coeffs;
        std::stringstream ss(po_coeffs);
        std::string tok;
        while (std::getline(ss, tok, ',')) coeffs.push_back(std::stoll(tok));
        IntPolynomial f(std::move(coeffs));
        // trial division only needs primes up to sqrt(n)
        const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(po_n))) + 1;
        PrimeTable t = make_table(std::max<std::uint64_t>(root, 1000), limit_flag);
        IntegerSet A = poly_set(f, po_n, t);
        const double psi = psi_of_set(A, t);

        std::vector<std::pair<std::string, double>> predictions;
        if (po_predict) {
            if (f.degree() == 1) {
                predictions.emplace_back("linear", predict_linear(f, po_n, t));
            } else {
                if (f.degree() == 2) {
                    if (!quadratic_is_irreducible(f)) {
                        std::cerr << "warning: quadratic is reducible; the irreducible "
                                     "predictor does not apply\n";
                        if (f.coeffs() == std::vector<std::int64_t>{-1, 0, 1}) {
                            predictions.emplace_back("reducible_x2m1",
                                                     predict_reducible_x2m1(po_n));
                        }
                    }
                }
                predictions.emplace_back("conjecture", predict_conjecture(f, po_n));
            }
        }
        if (predictions.empty()) predictions.emplace_back("", std::nan(""));
        for (const auto& [name, value] : predictions) {
            out.emit({{"n", std::to_string(po_n)},
                      {"set_size", std::to_string(A.size())},
                      {"psi", num(psi)},
                      {"predictor_name", name},
                      {"predicted", std::isnan(value) ? "" : num(value)}});
        }
        if (po_bcap > 0) {
            auto est = estimate_B_constant(po_bcap);
            out.emit({{"P", std::to_string(po_bcap)},
                      {"B_estimate", num(est.value)},
                      {"last_block_delta", num(est.last_block_delta)}});
        }
    });

    // predict --n N --theta T --c C
    auto* pred_cmd = app.add_subcommand("predict", "closed-form mean predictors");
    std::uint64_t pr_n = 0;
    double pr_theta = 0.5, pr_c = 1.0;
    pred_cmd->add_option("--n", pr_n)->required();
    pred_cmd->add_option("--theta", pr_theta)->required();
    pred_cmd->add_option("--c", pr_c)->required();
    pred_cmd->callback([&] {
        RegimeParams r{pr_n, pr_theta, pr_c};
        r.validate();
        out.emit({{"n", std::to_string(pr_n)},
                  {"theta", num(pr_theta)},
                  {"c", num(pr_c)},
                  {"delta", num(r.delta())},
                  {"k", std::to_string(r.k())},
                  {"predict_mean", num(predict_mean(r))},
                  {"bernoulli_main_term", num(bernoulli_main_term(pr_n, r.delta()))}});
    });

    // suite --scale quick|full
    auto* suite_cmd = app.add_subcommand("suite", "run the verification grid");
    std::string su_scale = "quick";
    suite_cmd->add_option("--scale", su_scale)->check(CLI::IsMember({"quick", "full"}));
    suite_cmd->callback([&] {
        auto results = run_acceptance(su_scale == "full" ? SuiteScale::full : SuiteScale::quick);
        for (const auto& c : results) {
            std::printf("%s criterion %2d: %s  [%s]\n",
                        c.pass ? "PASS" : (c.soft ? "WARN" : "FAIL"), c.id, c.name.c_str(),
                        c.detail.c_str());
        }
        if (!suite_passed(results)) rc = 1;
    });

    // global flags (--json, --seed, ...) may appear after the subcommand name
    for (auto* sub : app.get_subcommands(static_cast<bool (*)(const CLI::App*)>(nullptr))) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return rc;
}
