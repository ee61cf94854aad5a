#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qeis/serialize.hpp"
#include "qeis/verify.hpp"

namespace py = pybind11;
using namespace qeis;

namespace {

CoeffFamily family_of(const std::string& which) {
    if (which == "g") return CoeffFamily::g;
    if (which == "h") return CoeffFamily::h;
    if (which == "u") return CoeffFamily::u;
    throw std::invalid_argument("family must be one of g, h, u");
}

// Coefficients as exact rational strings, constant term first.
std::vector<std::string> series_coeffs(const std::string& which, int k, int order) {
    QExpansion f = which == "G" ? eisenstein_G(k, order)
                                : extract_coeffs(family_of(which), k, order)[k - 1];
    std::vector<std::string> out;
    for (int n = 0; n <= order; ++n) out.push_back(to_string(f.coeff(n)));
    return out;
}

std::string series_json(const std::string& which, int k, int order) {
    QExpansion f = which == "G" ? eisenstein_G(k, order)
                                : extract_coeffs(family_of(which), k, order)[k - 1];
    return series_to_json(f).dump();
}

std::vector<std::tuple<int, int, std::string, int>> coeff_table(const std::string& which,
                                                               int n_max) {
    bool a_table = which == "anm";
    if (!a_table && which != "bnm") throw std::invalid_argument("table must be anm or bnm");
    std::vector<std::tuple<int, int, std::string, int>> rows;
    for (int n = 1; n <= n_max; ++n)
        for (auto& [m, v] : (a_table ? a_row(n) : b_row(n)))
            rows.emplace_back(n, m, v.str(), a_table ? a_threshold(n) : b_threshold(n));
    return rows;
}

std::vector<std::tuple<std::string, bool, std::string>> lines_out(
    const std::vector<CheckLine>& lines) {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& l : lines) out.emplace_back(l.name, l.pass, l.detail);
    return out;
}

}  // namespace

PYBIND11_MODULE(_qeis, m) {
    m.doc() = "Exact q-series toolkit: Taylor coefficients of partial/false theta "
              "quotients, partition coefficient tables, and modular checks";

    m.def("series_coeffs", &series_coeffs, py::arg("which"), py::arg("k"), py::arg("order"),
          "Exact rational coefficients of g_k / h_k / u_k / G_k as strings");
    m.def("series_json", &series_json, py::arg("which"), py::arg("k"), py::arg("order"),
          "One series in the documented JSON schema");
    m.def("coeff_table", &coeff_table, py::arg("which"), py::arg("n_max"),
          "Rows (n, m, value, threshold) of the a(n,m) or b(n,m) table");
    m.def("unimodal_ranks", [](int n) { return unimodal_bruteforce(n).counts; }, py::arg("n"),
          "Exhaustive rank histogram of peak-marked unimodal sequences of size n");
    m.def(
        "verify_exact",
        [](int order) {
            ExactSuiteOptions opt;
            opt.order = order;
            opt.route_order = order;
            return lines_out(run_exact_suite(opt));
        },
        py::arg("order") = 20, "Run the exact identity suite; list of (name, pass, detail)");
    m.def(
        "verify_numeric",
        [](double tol, unsigned seed) {
            NumericSuiteOptions opt;
            opt.tol = tol;
            opt.seed = seed;
            return lines_out(run_numeric_suite(opt));
        },
        py::arg("tol") = 1e-8, py::arg("seed") = 20260823,
        "Run the numeric transformation-law suite");
    m.def("verify_limits", [](double tol) { return lines_out(run_limit_suite(tol)); },
          py::arg("tol") = 1e-7, "Run the completed-vs-target limit suite");
    m.def(
        "eval_function",
        [](const std::string& name, std::complex<double> z, std::complex<double> tau,
           std::complex<double> w, int terms) {
            ComplexSample s;
            s.z = z;
            s.tau = tau;
            s.w = w;
            s.terms = terms;
            return eval_function(name, s);
        },
        py::arg("name"), py::arg("z"), py::arg("tau"), py::arg("w") = std::complex<double>(0, 2),
        py::arg("terms") = 80,
        "Evaluate theta / psi / psihat / T / That / h / Hhat / frakHhat / eta");

    py::register_exception<accuracy_error>(m, "AccuracyError");
    py::register_exception<branch_error>(m, "BranchError");
}
