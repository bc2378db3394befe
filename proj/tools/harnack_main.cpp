// Command line front end: matrix I/O, bound and identity verification,
// the embedded reference-witness corpus, and the conjecture search.
//
// Exit codes: 0 all checks pass, 1 usage or parse error, 2 check
// failure, 3 conjecture-violation candidate found.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "harnack/eigen.hpp"
#include "harnack/json_io.hpp"
#include "harnack/lu.hpp"
#include "harnack/reference_corpus.hpp"

namespace {

using namespace harnack;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailure = 2;
constexpr int kExitViolation = 3;

struct GlobalOptions {
    double tol = kDefaultTol;
    double margin = kDefaultMargin;
    std::uint64_t seed = 42;
    std::string out_path;
    bool json_stdout = false;
};

std::string echo_command(int argc, char** argv) {
    std::ostringstream os;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) os << ' ';
        os << argv[i];
    }
    return os.str();
}

void write_output(const GlobalOptions& opts, const Json& payload, bool force_json_stdout = false) {
    if (!opts.out_path.empty()) {
        std::ofstream f(opts.out_path);
        if (!f) throw ParseError("cannot write output file: " + opts.out_path);
        f << payload.dump(2) << '\n';
    }
    if (opts.json_stdout || force_json_stdout) std::cout << payload.dump(2) << '\n';
}

void print_table(const RunReport& rep) {
    std::cout << std::left << std::setw(44) << "check" << std::setw(12) << "kind"
              << std::setw(16) << "computed" << std::setw(16) << "expected" << std::setw(11)
              << "tolerance"
              << "result\n";
    std::cout << std::string(105, '-') << '\n';
    for (const CheckResult& c : rep.checks) {
        std::cout << std::left << std::setw(44) << c.name << std::setw(12) << to_string(c.kind)
                  << std::setw(16) << std::setprecision(8) << c.computed << std::setw(16)
                  << c.expected << std::setw(11) << std::setprecision(2) << c.tolerance
                  << (c.pass ? "pass" : "FAIL") << '\n';
    }
    std::cout << std::string(105, '-') << '\n'
              << (rep.verdict ? "all checks passed" : "CHECK FAILURES PRESENT") << "  ("
              << std::setprecision(4) << rep.duration_ms << " ms)\n";
}

int finish_report(const GlobalOptions& opts, RunReport& rep,
                  std::chrono::steady_clock::time_point start) {
    rep.duration_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    const Json payload = run_report_to_json(rep);
    if (!opts.json_stdout) print_table(rep);
    write_output(opts, payload);
    return rep.verdict ? kExitOk : kExitCheckFailure;
}

IndexSet parse_index_list(const std::string& text) {
    std::vector<int> idx;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            idx.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw ParseError("cannot parse index list: " + text);
        }
    }
    try {
        return IndexSet(idx);
    } catch (const InvalidIndexSet& e) {
        throw ParseError(e.what());
    }
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            vals.push_back(std::stod(part));
        } catch (const std::exception&) {
            throw ParseError("cannot parse value list: " + text);
        }
    }
    return vals;
}

// Aggregates one bound family over many index sets into a single
// normalized-slack row (the worst set), matching the pass rule
// slack >= -tol * (1 + |bound|).
struct FamilyWorst {
    double normalized = std::numeric_limits<double>::infinity();
    std::string where;
};

int cmd_verify(const GlobalOptions& opts, const std::string& path, const std::string& echo) {
    const auto start = std::chrono::steady_clock::now();
    RunReport rep;
    rep.command = echo;

    const ComplexMatrix a = load_matrix_file(path);
    const int n = a.dim();
    const std::vector<double> sv = singular_values(a);
    const bool contraction = 1.0 - sv.front() >= opts.margin;

    const IdentityResiduals ids = identity_residuals(a, opts.margin);
    const double id_tol = 1e-10 * ids.scale;
    rep.add(make_check("identity/expz", CheckKind::Value, ids.expz, 0.0, id_tol));
    rep.add(make_check("identity/exp2", CheckKind::Value, ids.exp2, 0.0, id_tol));
    rep.add(make_check("identity/fan", CheckKind::Value, ids.fan, 0.0, id_tol));
    if (ids.exp3) rep.add(make_check("identity/exp3", CheckKind::Value, *ids.exp3, 0.0, id_tol));

    rep.add(make_check("strict_contraction", CheckKind::Flag, contraction ? 1.0 : 0.0, 1.0, 0.0));
    if (!contraction) {
        std::cout << "contraction-gated checks skipped: NotContractive (sigma_1 = " << sv.front()
                  << ")\n";
        return finish_report(opts, rep, start);
    }

    const auto rows = eigen_bound_rows(a, opts.margin);
    for (size_t j = 0; j < rows.size(); ++j)
        rep.add(make_check("eigen_bound/j" + std::to_string(j + 1), CheckKind::AtMost,
                           rows[j].lambda, rows[j].bound, opts.tol));

    std::map<std::string, FamilyWorst> worst;
    const auto sets = index_sets_for(n, 50, opts.seed);
    for (const IndexSet& s : sets) {
        const BoundReport br = bound_report(a, s, opts.tol, opts.margin);
        for (const auto& [name, slack] : br.slacks) {
            const bool upper = br.upper_bounds.count(name) > 0;
            const double bound = upper ? br.upper_bounds.at(name) : br.lower_bounds.at(name);
            const double normalized = slack / (1.0 + std::abs(bound));
            auto& fam = worst[name];
            if (normalized < fam.normalized) {
                fam.normalized = normalized;
                fam.where = s.to_string();
            }
        }
    }
    for (const auto& [name, fam] : worst)
        rep.add(make_check("bounds/" + name + "_worst_slack(i=" + fam.where + ")",
                           CheckKind::AtLeast, fam.normalized, 0.0, opts.tol));

    Rng rng(derive_seed(opts.seed, 0x7u));
    const TungReport tung = tung_check(a, random_unitary(n, rng), opts.margin);
    rep.add(make_check("tung/lower_le_middle", CheckKind::AtMost, tung.lower, tung.middle,
                       opts.tol));
    rep.add(make_check("tung/middle_le_upper", CheckKind::AtMost, tung.middle, tung.upper,
                       opts.tol));

    const double lambda_min = hermitian_eigenvalues(harnack_quotient(a)).back();
    rep.add(make_check("positive_definite/lambda_min", CheckKind::AtLeast, lambda_min, 0.0,
                       opts.tol));

    return finish_report(opts, rep, start);
}

int cmd_bounds(const GlobalOptions& opts, const std::string& path, const std::string& indices,
               const std::string& echo) {
    const auto start = std::chrono::steady_clock::now();
    const ComplexMatrix a = load_matrix_file(path);
    const int n = a.dim();

    std::vector<IndexSet> sets;
    if (!indices.empty())
        sets.push_back(parse_index_list(indices));
    else
        sets = index_sets_for(n, 50, opts.seed);

    RunReport rep;
    rep.command = echo;
    Json reports = Json::array();
    for (const IndexSet& s : sets) {
        const BoundReport br = bound_report(a, s, opts.tol, opts.margin);
        reports.push_back(bound_report_to_json(br));
        if (sets.size() == 1) {
            for (const auto& [name, bound] : br.upper_bounds)
                rep.add(make_check("upper/" + name, CheckKind::AtMost, br.lhs, bound, opts.tol));
            for (const auto& [name, bound] : br.lower_bounds)
                rep.add(make_check("lower/" + name, CheckKind::AtLeast, br.lhs_lower, bound,
                                   opts.tol));
        } else {
            rep.add(make_check("bounds(i=" + s.to_string() + ")", CheckKind::Flag,
                               br.all_pass ? 1.0 : 0.0, 1.0, 0.0));
        }
    }
    rep.duration_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (!opts.json_stdout) print_table(rep);
    write_output(opts, reports);
    return rep.verdict ? kExitOk : kExitCheckFailure;
}

int cmd_cayley(const GlobalOptions& opts, const std::string& path_a, const std::string& path_b,
               const std::string& indices, const std::string& echo) {
    const auto start = std::chrono::steady_clock::now();
    const ComplexMatrix a = load_matrix_file(path_a);
    const int n = a.dim();

    std::vector<IndexSet> sets;
    if (!indices.empty())
        sets.push_back(parse_index_list(indices));
    else
        sets = index_sets_for(n, 50, opts.seed);

    RunReport rep;
    rep.command = echo;
    Json reports = Json::array();

    if (path_b.empty()) {
        for (const IndexSet& s : sets) {
            const CayleyReport cr = cayley_bounds(a, s, opts.tol, opts.margin);
            reports.push_back(cayley_report_to_json(cr));
            rep.add(make_check("chain(i=" + s.to_string() + ")/lower", CheckKind::AtMost, cr.lower,
                               cr.lhs, opts.tol));
            rep.add(make_check("chain(i=" + s.to_string() + ")/upper", CheckKind::AtMost, cr.lhs,
                               cr.upper, opts.tol));
        }
    } else {
        const ComplexMatrix b = load_matrix_file(path_b);
        for (const IndexSet& s : sets) {
            const CayleyReport cr = cayley_difference_bounds(a, b, s, opts.tol, opts.margin);
            reports.push_back(cayley_report_to_json(cr));
            rep.add(make_check("diff(i=" + s.to_string() + ")/lower", CheckKind::AtMost, cr.lower,
                               cr.lhs, opts.tol));
            rep.add(make_check("diff(i=" + s.to_string() + ")/upper", CheckKind::AtMost, cr.lhs,
                               cr.upper, opts.tol));
            if (reports.size() == 1 && cr.factorization_residual)
                rep.add(make_check("factorization_residual", CheckKind::Value,
                                   *cr.factorization_residual, 0.0, 1e-10 * (1.0 + cr.lhs)));
        }
        const double herm_tol = 1e-10;
        const bool hermitian_pair =
            frobenius_norm(a - adjoint(a)) <= herm_tol * (1.0 + frobenius_norm(a)) &&
            frobenius_norm(b - adjoint(b)) <= herm_tol * (1.0 + frobenius_norm(b));
        if (hermitian_pair) {
            const auto fh = fan_hoffman_rows(a, b, opts.tol, opts.margin);
            for (size_t j = 0; j < fh.size(); ++j)
                rep.add(make_check("fan_hoffman/j" + std::to_string(j + 1), CheckKind::AtMost,
                                   fh[j].sigma_diff, fh[j].sigma_bound, opts.tol));
        }
    }
    rep.duration_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (!opts.json_stdout) print_table(rep);
    write_output(opts, reports);
    return rep.verdict ? kExitOk : kExitCheckFailure;
}

int cmd_random(const GlobalOptions& opts, int n, const std::string& mode, double max_norm,
               const std::string& prescribed) {
    RandomSpec spec;
    spec.n = n;
    spec.mode = random_mode_from_string(mode);
    spec.max_norm = max_norm;
    spec.seed = opts.seed;
    if (!prescribed.empty()) spec.prescribed = parse_double_list(prescribed);
    const ComplexMatrix m = random_matrix(spec);
    const Json payload = matrix_to_json(m);
    if (opts.out_path.empty())
        std::cout << payload.dump(2) << '\n';
    else
        write_output(opts, payload, false);
    return kExitOk;
}

int cmd_search(const GlobalOptions& opts, int n, long trials, const std::string& modes,
               int descent_steps, double descent_scale, const std::string& csv_path) {
    SearchConfig config;
    config.n = n;
    config.trials = trials;
    config.seed = opts.seed;
    config.descent_steps = descent_steps;
    config.descent_scale = descent_scale;
    config.margin = opts.margin;
    if (!modes.empty()) {
        std::stringstream ss(modes);
        std::string part;
        while (std::getline(ss, part, ',')) config.modes.push_back(random_mode_from_string(part));
    }

    const SearchSummary summary = search(config, !csv_path.empty());
    if (!csv_path.empty() && summary.trace) {
        std::ofstream csv(csv_path);
        if (!csv) throw ParseError("cannot write CSV file: " + csv_path);
        csv << "trial,min_slack\n";
        for (const auto& [trial, slack] : *summary.trace)
            csv << trial << ',' << std::setprecision(17) << slack << '\n';
    }

    const Json payload = search_summary_to_json(summary);
    if (opts.out_path.empty() || opts.json_stdout) std::cout << payload.dump(2) << '\n';
    if (!opts.out_path.empty()) write_output(opts, payload);

    if (summary.violation_found) {
        std::cerr << "candidate conjecture violation: min_slack = " << std::setprecision(17)
                  << summary.best.min_slack << " (trial seed " << summary.best.trial_seed
                  << ")\n";
        return kExitViolation;
    }
    return kExitOk;
}

int cmd_repro(const GlobalOptions& opts, const std::string& echo) {
    const auto start = std::chrono::steady_clock::now();
    RunReport rep;
    rep.command = echo;
    for (CheckResult& c : evaluate_all_examples()) rep.add(std::move(c));
    return finish_report(opts, rep, start);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical toolkit for Harnack-type matrix inequalities"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--tol", opts.tol, "Inequality tolerance")->capture_default_str();
    app.add_option("--margin", opts.margin, "Strict-contraction margin (1 - sigma_1 >= margin)")
        ->capture_default_str();
    app.add_option("--seed", opts.seed, "Seed for every random draw")->capture_default_str();
    app.add_option("--out", opts.out_path, "Write the JSON report to this path");
    app.add_flag("--json", opts.json_stdout, "Print JSON instead of the table");

    std::string input_a, input_b, indices, modes, prescribed, csv_path, mode = "gaussian-scaled";
    int n = 3, descent_steps = 0;
    long trials = 1000;
    double max_norm = 0.9, descent_scale = 0.05;

    CLI::App* verify = app.add_subcommand("verify", "Identity and bound checks for one matrix");
    verify->add_option("input", input_a, "Matrix JSON file")->required();
    verify->fallthrough();

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "Bound-family report for one matrix");
    bounds_cmd->add_option("input", input_a, "Matrix JSON file")->required();
    bounds_cmd->add_option("--indices", indices, "Comma-separated index set, e.g. 1,3");
    bounds_cmd->fallthrough();

    CLI::App* cayley_cmd =
        app.add_subcommand("cayley", "Cayley-transform chains for one matrix or a pair");
    cayley_cmd->add_option("input", input_a, "Matrix JSON file")->required();
    cayley_cmd->add_option("input2", input_b, "Second matrix JSON file (difference chains)");
    cayley_cmd->add_option("--indices", indices, "Comma-separated index set");
    cayley_cmd->fallthrough();

    CLI::App* random_cmd = app.add_subcommand("random", "Emit a seeded random matrix");
    random_cmd->add_option("--n", n, "Dimension")->required();
    random_cmd->add_option("--mode", mode, "Generation mode")->capture_default_str();
    random_cmd->add_option("--max-norm", max_norm, "Target largest singular value")
        ->capture_default_str();
    random_cmd->add_option("--prescribed", prescribed, "Comma-separated singular values");
    random_cmd->fallthrough();

    CLI::App* search_cmd = app.add_subcommand("search", "Randomized conjecture search");
    search_cmd->add_option("--n", n, "Dimension")->required();
    search_cmd->add_option("--trials", trials, "Trial count")->capture_default_str();
    search_cmd->add_option("--modes", modes, "Comma-separated generation modes (default: all)");
    search_cmd->add_option("--descent-steps", descent_steps, "Local refinement steps")
        ->capture_default_str();
    search_cmd->add_option("--descent-scale", descent_scale, "Initial perturbation size")
        ->capture_default_str();
    search_cmd->add_option("--csv", csv_path, "Write (trial, min_slack) CSV to this path");
    search_cmd->fallthrough();

    CLI::App* repro = app.add_subcommand("repro-paper", "Reproduce the published witnesses");
    repro->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const std::string echo = echo_command(argc, argv);
    try {
        if (verify->parsed()) return cmd_verify(opts, input_a, echo);
        if (bounds_cmd->parsed()) return cmd_bounds(opts, input_a, indices, echo);
        if (cayley_cmd->parsed()) return cmd_cayley(opts, input_a, input_b, indices, echo);
        if (random_cmd->parsed()) return cmd_random(opts, n, mode, max_norm, prescribed);
        if (search_cmd->parsed())
            return cmd_search(opts, n, trials, modes, descent_steps, descent_scale, csv_path);
        if (repro->parsed()) return cmd_repro(opts, echo);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidSpec& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailure;
    }
    return kExitUsage;
}
