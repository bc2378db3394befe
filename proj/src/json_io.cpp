#include "harnack/json_io.hpp"

#include <cmath>
#include <fstream>

namespace harnack {

namespace {

CheckKind check_kind_from_string(const std::string& s) {
    if (s == "value") return CheckKind::Value;
    if (s == "at-most") return CheckKind::AtMost;
    if (s == "at-least") return CheckKind::AtLeast;
    if (s == "strict-less") return CheckKind::StrictLess;
    if (s == "flag") return CheckKind::Flag;
    throw ParseError("unknown check kind: " + s);
}

} // namespace

Json matrix_to_json(const ComplexMatrix& m) {
    const int n = m.dim();
    Json re = Json::array();
    Json im = Json::array();
    bool any_imag = false;
    for (int i = 0; i < n; ++i) {
        Json re_row = Json::array();
        Json im_row = Json::array();
        for (int j = 0; j < n; ++j) {
            re_row.push_back(m(i, j).real());
            im_row.push_back(m(i, j).imag());
            any_imag = any_imag || m(i, j).imag() != 0.0;
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    Json out;
    out["n"] = n;
    out["re"] = std::move(re);
    if (any_imag) out["im"] = std::move(im);
    return out;
}

ComplexMatrix matrix_from_json(const Json& j) {
    try {
        if (!j.is_object() || !j.contains("n") || !j.contains("re"))
            throw ParseError("matrix JSON requires fields \"n\" and \"re\"");
        const int n = j.at("n").get<int>();
        if (n < 1) throw ParseError("matrix dimension must be at least 1");

        const auto read_rows = [&](const Json& rows, const char* which) {
            if (!rows.is_array() || static_cast<int>(rows.size()) != n)
                throw ParseError(std::string("matrix field \"") + which + "\" must be an n-row array");
            std::vector<std::vector<double>> out;
            out.reserve(static_cast<size_t>(n));
            for (const Json& row : rows) {
                if (!row.is_array() || static_cast<int>(row.size()) != n)
                    throw ParseError(std::string("matrix field \"") + which +
                                     "\" must contain rows of length n");
                std::vector<double> vals;
                vals.reserve(static_cast<size_t>(n));
                for (const Json& v : row) {
                    if (!v.is_number()) throw ParseError("matrix entries must be numbers");
                    vals.push_back(v.get<double>());
                }
                out.push_back(std::move(vals));
            }
            return out;
        };

        const auto re = read_rows(j.at("re"), "re");
        std::vector<std::vector<double>> im;
        if (j.contains("im")) im = read_rows(j.at("im"), "im");

        ComplexMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                m(i, k) = Complex(re[static_cast<size_t>(i)][static_cast<size_t>(k)],
                                  im.empty() ? 0.0
                                             : im[static_cast<size_t>(i)][static_cast<size_t>(k)]);
        if (!m.is_finite()) throw ParseError("matrix entries must be finite");
        return m;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed matrix JSON: ") + e.what());
    }
}

ComplexMatrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw ParseError("cannot parse " + path + ": " + e.what());
    }
    return matrix_from_json(j);
}

Json index_set_to_json(const IndexSet& s) {
    Json out;
    out["k"] = s.k();
    out["indices"] = s.indices();
    return out;
}

IndexSet index_set_from_json(const Json& j) {
    try {
        return IndexSet(j.at("indices").get<std::vector<int>>());
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed index set JSON: ") + e.what());
    }
}

Json tung_report_to_json(const TungReport& r) {
    Json out;
    out["lower"] = r.lower;
    out["middle"] = r.middle;
    out["upper"] = r.upper;
    out["equality_side"] = r.equality_side;
    return out;
}

Json bound_report_to_json(const BoundReport& r) {
    Json out;
    out["matrix_id"] = r.matrix_id;
    out["index_set"] = index_set_to_json(r.index_set);
    out["lhs"] = r.lhs;
    out["lhs_lower"] = r.lhs_lower;
    out["upper_bounds"] = r.upper_bounds;
    out["lower_bounds"] = r.lower_bounds;
    out["slacks"] = r.slacks;
    out["verdict"] = r.verdict;
    out["all_pass"] = r.all_pass;
    return out;
}

Json identity_residuals_to_json(const IdentityResiduals& r) {
    Json out;
    out["expz"] = r.expz;
    out["exp2"] = r.exp2;
    out["fan"] = r.fan;
    if (r.exp3)
        out["exp3"] = *r.exp3;
    else
        out["exp3"] = nullptr; // NotContractive; identity needs a contraction
    out["scale"] = r.scale;
    return out;
}

Json multi_matrix_report_to_json(const MultiMatrixReport& r) {
    Json out;
    out["identity_residual"] = r.identity_residual;
    out["residual_scale"] = r.residual_scale;
    out["lhs"] = r.lhs;
    out["rhs"] = r.rhs;
    out["holds"] = r.holds;
    return out;
}

Json cayley_report_to_json(const CayleyReport& r) {
    Json out;
    out["index_set"] = index_set_to_json(r.index_set);
    out["lhs"] = r.lhs;
    out["lower"] = r.lower;
    out["upper"] = r.upper;
    out["verdict"] = r.verdict;
    if (r.factorization_residual) out["factorization_residual"] = *r.factorization_residual;
    out["lower_bound_form"] = r.lower_bound_form;
    return out;
}

Json conjecture_record_to_json(const ConjectureRecord& r) {
    Json out;
    out["matrix"] = matrix_to_json(r.matrix);
    out["slacks"] = r.slacks;
    out["min_slack"] = r.min_slack;
    out["min_j"] = r.min_j;
    out["norm_slack"] = r.norm_slack;
    out["trial_seed"] = r.trial_seed;
    return out;
}

Json search_config_to_json(const SearchConfig& c) {
    Json out;
    out["n"] = c.n;
    out["trials"] = c.trials;
    out["seed"] = c.seed;
    Json modes = Json::array();
    for (RandomMode m : c.modes) modes.push_back(to_string(m));
    out["modes"] = std::move(modes);
    out["descent_steps"] = c.descent_steps;
    out["descent_scale"] = c.descent_scale;
    out["margin"] = c.margin;
    return out;
}

Json search_summary_to_json(const SearchSummary& s) {
    Json out;
    out["config"] = search_config_to_json(s.config);
    out["best_record"] = conjecture_record_to_json(s.best);
    out["trials_completed"] = s.trials_completed;
    Json hist;
    for (const auto& [mode, h] : s.histogram) {
        Json entry;
        entry["count"] = h.count;
        entry["min_slack"] = h.min_slack;
        entry["mean_slack"] = h.mean_slack;
        entry["bins"] = h.bins;
        hist[mode] = std::move(entry);
    }
    out["histogram"] = std::move(hist);
    out["violation_found"] = s.violation_found;
    out["descent_accepted"] = s.descent_accepted;
    out["final_step_scale"] = s.final_step_scale;
    return out;
}

Json check_result_to_json(const CheckResult& c) {
    Json out;
    out["name"] = c.name;
    out["kind"] = to_string(c.kind);
    out["computed"] = c.computed;
    out["expected"] = c.expected;
    out["tolerance"] = c.tolerance;
    out["pass"] = c.pass;
    return out;
}

CheckResult check_result_from_json(const Json& j) {
    try {
        CheckResult c;
        c.name = j.at("name").get<std::string>();
        c.kind = check_kind_from_string(j.at("kind").get<std::string>());
        c.computed = j.at("computed").get<double>();
        c.expected = j.at("expected").get<double>();
        c.tolerance = j.at("tolerance").get<double>();
        c.pass = j.at("pass").get<bool>();
        return c;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed check JSON: ") + e.what());
    }
}

Json run_report_to_json(const RunReport& r) {
    Json out;
    out["command"] = r.command;
    Json checks = Json::array();
    for (const CheckResult& c : r.checks) checks.push_back(check_result_to_json(c));
    out["checks"] = std::move(checks);
    out["verdict"] = r.verdict;
    out["duration_ms"] = r.duration_ms;
    return out;
}

RunReport run_report_from_json(const Json& j) {
    try {
        RunReport r;
        r.command = j.at("command").get<std::string>();
        for (const Json& c : j.at("checks")) r.checks.push_back(check_result_from_json(c));
        r.verdict = j.at("verdict").get<bool>();
        r.duration_ms = j.at("duration_ms").get<double>();
        return r;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed run report JSON: ") + e.what());
    }
}

} // namespace harnack
