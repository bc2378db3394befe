// Python bindings for the core operations. Matrices cross the boundary
// as complex numpy arrays; structured reports cross as plain dicts with
// the same field names as the JSON output of the CLI.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "harnack/eigen.hpp"
#include "harnack/json_io.hpp"
#include "harnack/lu.hpp"
#include "harnack/reference_corpus.hpp"

namespace py = pybind11;
using namespace harnack;

namespace {

using ComplexArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

ComplexMatrix from_array(const ComplexArray& arr) {
    if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1))
        throw Error("expected a square 2-d array");
    const int n = static_cast<int>(arr.shape(0));
    ComplexMatrix m(n);
    auto r = arr.unchecked<2>();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = r(i, j);
    if (!m.is_finite()) throw Error("matrix entries must be finite");
    return m;
}

py::array_t<std::complex<double>> to_array(const ComplexMatrix& m) {
    const int n = m.dim();
    py::array_t<std::complex<double>> arr({n, n});
    auto w = arr.mutable_unchecked<2>();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w(i, j) = m(i, j);
    return arr;
}

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::object: {
            py::dict d;
            for (const auto& [key, value] : j.items()) d[py::str(key)] = json_to_py(value);
            return d;
        }
        case Json::value_t::array: {
            py::list l;
            for (const auto& v : j) l.append(json_to_py(v));
            return l;
        }
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        default: return py::none();
    }
}

IndexSet make_index_set(const std::vector<int>& idx) { return IndexSet(idx); }

std::vector<RandomMode> parse_modes(const std::vector<std::string>& names) {
    std::vector<RandomMode> modes;
    for (const auto& n : names) modes.push_back(random_mode_from_string(n));
    return modes;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Harnack-type matrix inequality toolkit (C++ core)";

    const py::object base = py::register_exception<Error>(m, "HarnackError");
    py::register_exception<SingularMatrix>(m, "SingularMatrix", base);
    py::register_exception<NotHermitian>(m, "NotHermitian", base);
    py::register_exception<NotContractive>(m, "NotContractive", base);
    py::register_exception<NotUnitary>(m, "NotUnitary", base);
    py::register_exception<ConvergenceFailure>(m, "ConvergenceFailure", base);
    py::register_exception<InvalidSpec>(m, "InvalidSpec", base);
    py::register_exception<InvalidIndexSet>(m, "InvalidIndexSet", base);
    py::register_exception<DomainViolation>(m, "DomainViolation", base);
    py::register_exception<ParseError>(m, "ParseError", base);

    // linear algebra
    m.def("adjoint", [](const ComplexArray& a) { return to_array(adjoint(from_array(a))); });
    m.def("real_part", [](const ComplexArray& a) { return to_array(real_part(from_array(a))); });
    m.def("imag_part", [](const ComplexArray& a) { return to_array(imag_part(from_array(a))); });
    m.def("inverse", [](const ComplexArray& a) { return to_array(inverse(from_array(a))); });
    m.def("determinant", [](const ComplexArray& a) { return determinant(from_array(a)); });
    m.def("lu_solve", [](const ComplexArray& a, const ComplexArray& b) {
        return to_array(lu_solve(from_array(a), from_array(b)));
    });
    m.def("hermitian_eigenvalues",
          [](const ComplexArray& a) { return hermitian_eigenvalues(from_array(a)); });
    m.def("singular_values", [](const ComplexArray& a) { return singular_values(from_array(a)); });
    m.def("general_eigenvalues",
          [](const ComplexArray& a) { return general_eigenvalues(from_array(a)); });
    m.def("polar_abs", [](const ComplexArray& a) { return to_array(polar_abs(from_array(a))); });
    m.def("sqrt_psd", [](const ComplexArray& a) { return to_array(sqrt_psd(from_array(a))); });

    m.def(
        "random_matrix",
        [](int n, const std::string& mode, double max_norm,
           std::optional<std::vector<double>> prescribed, std::uint64_t seed) {
            RandomSpec spec;
            spec.n = n;
            spec.mode = random_mode_from_string(mode);
            spec.max_norm = max_norm;
            spec.prescribed = std::move(prescribed);
            spec.seed = seed;
            return to_array(random_matrix(spec));
        },
        py::arg("n"), py::arg("mode") = "gaussian-scaled", py::arg("max_norm") = 0.9,
        py::arg("prescribed") = std::nullopt, py::arg("seed") = 0);
    m.def(
        "random_unitary",
        [](int n, std::uint64_t seed) {
            Rng rng(seed);
            return to_array(random_unitary(n, rng));
        },
        py::arg("n"), py::arg("seed") = 0);

    // Harnack quotient and bounds
    m.def("harnack_quotient",
          [](const ComplexArray& a) { return to_array(harnack_quotient(from_array(a))); });
    m.def(
        "identity_residuals",
        [](const ComplexArray& a, double margin) {
            return json_to_py(identity_residuals_to_json(identity_residuals(from_array(a), margin)));
        },
        py::arg("a"), py::arg("margin") = kDefaultMargin);
    m.def(
        "tung_check",
        [](const ComplexArray& z, const ComplexArray& u, double margin) {
            return json_to_py(tung_report_to_json(tung_check(from_array(z), from_array(u), margin)));
        },
        py::arg("z"), py::arg("u"), py::arg("margin") = kDefaultMargin);
    m.def(
        "eigen_bound_rows",
        [](const ComplexArray& a, double margin) {
            py::list out;
            for (const auto& row : eigen_bound_rows(from_array(a), margin))
                out.append(py::make_tuple(row.lambda, row.bound));
            return out;
        },
        py::arg("a"), py::arg("margin") = kDefaultMargin);
    m.def(
        "bound_report",
        [](const ComplexArray& a, const std::vector<int>& indices, double tol, double margin) {
            return json_to_py(bound_report_to_json(
                bound_report(from_array(a), make_index_set(indices), tol, margin)));
        },
        py::arg("a"), py::arg("indices"), py::arg("tol") = kDefaultTol,
        py::arg("margin") = kDefaultMargin);
    m.def(
        "naive_lower_bound_check",
        [](const ComplexArray& a, double tol, double margin) {
            py::list out;
            for (const auto& row : naive_lower_bound_check(from_array(a), tol, margin)) {
                py::dict d;
                d["lambda"] = row.lambda;
                d["naive_bound"] = row.naive_bound;
                d["naive_violated"] = row.naive_violated;
                d["valid_tail"] = row.valid_tail;
                d["valid_swapped"] = row.valid_swapped;
                d["valid_tail_ok"] = row.valid_tail_ok;
                d["valid_swapped_ok"] = row.valid_swapped_ok;
                out.append(d);
            }
            return out;
        },
        py::arg("a"), py::arg("tol") = kDefaultTol, py::arg("margin") = kDefaultMargin);
    m.def(
        "multi_matrix_bound",
        [](const ComplexArray& a, const ComplexArray& b, const std::vector<int>& indices,
           double tol, double margin) {
            return json_to_py(multi_matrix_report_to_json(multi_matrix_bound(
                from_array(a), from_array(b), make_index_set(indices), tol, margin)));
        },
        py::arg("a"), py::arg("b"), py::arg("indices"), py::arg("tol") = kDefaultTol,
        py::arg("margin") = kDefaultMargin);

    // Cayley transforms
    m.def("cayley", [](const ComplexArray& x) { return to_array(cayley(from_array(x))); });
    m.def(
        "cayley_bounds",
        [](const ComplexArray& a, const std::vector<int>& indices, double tol, double margin) {
            return json_to_py(cayley_report_to_json(
                cayley_bounds(from_array(a), make_index_set(indices), tol, margin)));
        },
        py::arg("a"), py::arg("indices"), py::arg("tol") = kDefaultTol,
        py::arg("margin") = kDefaultMargin);
    m.def(
        "cayley_difference_bounds",
        [](const ComplexArray& a, const ComplexArray& b, const std::vector<int>& indices,
           double tol, double margin) {
            return json_to_py(cayley_report_to_json(cayley_difference_bounds(
                from_array(a), from_array(b), make_index_set(indices), tol, margin)));
        },
        py::arg("a"), py::arg("b"), py::arg("indices"), py::arg("tol") = kDefaultTol,
        py::arg("margin") = kDefaultMargin);
    m.def(
        "fan_hoffman_rows",
        [](const ComplexArray& a, const ComplexArray& b, double tol, double margin) {
            py::list out;
            for (const auto& row : fan_hoffman_rows(from_array(a), from_array(b), tol, margin))
                out.append(py::make_tuple(row.sigma_diff, row.sigma_bound, row.ok));
            return out;
        },
        py::arg("a"), py::arg("b"), py::arg("tol") = kDefaultTol,
        py::arg("margin") = kDefaultMargin);

    // conjecture evaluators and search
    m.def(
        "j_conjecture_slack",
        [](const ComplexArray& a, double margin) {
            return json_to_py(conjecture_record_to_json(j_conjecture_slack(from_array(a), margin)));
        },
        py::arg("a"), py::arg("margin") = kDefaultMargin);
    m.def(
        "loewner_counterexample_check",
        [](const ComplexArray& a, double margin) {
            const LoewnerCheck c = loewner_counterexample_check(from_array(a), margin);
            py::dict d;
            d["upper_diff"] = to_array(c.upper_diff);
            d["lower_diff"] = to_array(c.lower_diff);
            d["upper_min_eig"] = c.upper_min_eig;
            d["lower_min_eig"] = c.lower_min_eig;
            d["upper_order_holds"] = c.upper_order_holds;
            d["lower_order_holds"] = c.lower_order_holds;
            return d;
        },
        py::arg("a"), py::arg("margin") = kDefaultMargin);
    m.def(
        "weak_bounds_check",
        [](const ComplexArray& a, double tol, double margin) {
            const WeakBoundsReport rep = weak_bounds_check(from_array(a), tol, margin);
            py::list rows;
            for (const auto& r : rep.rows) {
                py::dict d;
                d["resolvent_eig"] = r.resolvent_eig;
                d["weak_j_bound"] = r.weak_j_bound;
                d["weak_j_alt_bound"] = r.weak_j_alt_bound;
                d["harnack_eig"] = r.harnack_eig;
                d["weak_harnack_bound"] = r.weak_harnack_bound;
                d["weak_j_ok"] = r.weak_j_ok;
                d["weak_j_alt_ok"] = r.weak_j_alt_ok;
                d["weak_harnack_ok"] = r.weak_harnack_ok;
                rows.append(d);
            }
            py::dict out;
            out["rows"] = rows;
            out["norm_value"] = rep.norm_value;
            out["weak_norm_bound"] = rep.weak_norm_bound;
            out["weak_norm_ok"] = rep.weak_norm_ok;
            out["all_ok"] = rep.all_ok;
            return out;
        },
        py::arg("a"), py::arg("tol") = kDefaultTol, py::arg("margin") = kDefaultMargin);
    m.def(
        "special_case_check",
        [](const ComplexArray& a, double tol, double margin) {
            const SpecialCaseReport rep = special_case_check(from_array(a), tol, margin);
            py::dict d;
            d["is_normal"] = rep.is_normal;
            d["is_singular"] = rep.is_singular;
            d["slacks"] = rep.slacks;
            d["normal_ok"] = rep.normal_ok;
            d["last_index_ok"] = rep.last_index_ok;
            d["singular_top_ok"] = rep.singular_top_ok;
            d["singular_target"] = rep.singular_target;
            return d;
        },
        py::arg("a"), py::arg("tol") = kDefaultTol, py::arg("margin") = kDefaultMargin);
    m.def("resolvent_spectrum_check", [](const ComplexArray& a) {
        const ResolventSpectrumCheck c = resolvent_spectrum_check(from_array(a));
        py::dict d;
        d["max_re_resolvent"] = c.max_re_resolvent;
        d["threshold"] = c.threshold;
        d["norm_value"] = c.norm_value;
        d["spectral_route_holds"] = c.spectral_route_holds;
        return d;
    });
    m.def(
        "search",
        [](int n, long trials, std::uint64_t seed, const std::vector<std::string>& modes,
           int descent_steps, double descent_scale, double margin) {
            SearchConfig config;
            config.n = n;
            config.trials = trials;
            config.seed = seed;
            config.modes = parse_modes(modes);
            config.descent_steps = descent_steps;
            config.descent_scale = descent_scale;
            config.margin = margin;
            return json_to_py(search_summary_to_json(search(config)));
        },
        py::arg("n"), py::arg("trials") = 1000, py::arg("seed") = 0,
        py::arg("modes") = std::vector<std::string>{}, py::arg("descent_steps") = 0,
        py::arg("descent_scale") = 0.05, py::arg("margin") = kDefaultMargin);

    // reference corpus
    m.def("reference_checks", []() {
        py::list out;
        for (const CheckResult& c : evaluate_all_examples())
            out.append(json_to_py(check_result_to_json(c)));
        return out;
    });

    m.attr("DEFAULT_TOL") = kDefaultTol;
    m.attr("DEFAULT_MARGIN") = kDefaultMargin;
    m.attr("VIOLATION_THRESHOLD") = kViolationThreshold;
#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
