#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "qeis/serialize.hpp"
#include "qeis/verify.hpp"

namespace {

using namespace qeis;

struct CliConfig {
    int order = 8;
    int k_max = 6;
    int n_max = 10;
    std::string format = "table";
    double tol = 1e-8;
    unsigned seed = 20260823;
    std::string suite = "all";
};

std::string pretty_series(const QExpansion& f) {
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= f.order(); ++n) {
        const Rational& c = f.coeff(n);
        if (c == 0) continue;
        Rational a = rat_abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (n == 0)
            os << to_string(a);
        else {
            if (a != 1) os << to_string(a) << "*";
            os << (n == 1 ? "q" : "q^" + std::to_string(n));
        }
    }
    if (first) os << "0";
    return os.str();
}

int cmd_series(const std::string& which, const CliConfig& cfg) {
    std::vector<std::pair<std::string, QExpansion>> rows;
    if (which == "G") {
        for (int k = 2; k <= cfg.k_max; k += 2)
            rows.emplace_back("G_" + std::to_string(k), eisenstein_G(k, cfg.order));
    } else {
        CoeffFamily fam = which == "g"   ? CoeffFamily::g
                          : which == "h" ? CoeffFamily::h
                                         : CoeffFamily::u;
        auto series = extract_coeffs(fam, cfg.k_max, cfg.order);
        for (int k = 1; k <= cfg.k_max; ++k)
            rows.emplace_back(which + "_" + std::to_string(k), series[k - 1]);
    }
    if (cfg.format == "json") {
        json j = {{"which", which}, {"k_max", cfg.k_max}, {"order", cfg.order}};
        json series = json::object();
        for (auto& [name, f] : rows) series[name] = series_to_json(f);
        j["series"] = series;
        std::cout << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "name,n,value\n";
        for (auto& [name, f] : rows)
            for (int n = 0; n <= f.order(); ++n)
                if (f.coeff(n) != 0) std::cout << name << ',' << n << ',' << to_string(f.coeff(n)) << '\n';
    } else {
        for (auto& [name, f] : rows) std::cout << name << " = " << pretty_series(f) << "\n";
    }
    return 0;
}

int cmd_coeff_table(const std::string& which, const CliConfig& cfg) {
    bool a_table = which == "anm";
    std::vector<std::tuple<int, int, Integer>> rows;
    for (int n = 1; n <= cfg.n_max; ++n)
        for (auto& [m, v] : (a_table ? a_row(n) : b_row(n)))
            if (v != 0) rows.emplace_back(n, m, v);
    if (cfg.format == "json") {
        json j = {{"table", which}, {"n_max", cfg.n_max}};
        json jr = json::array();
        for (auto& [n, m, v] : rows)
            jr.push_back({{"n", n},
                          {"m", m},
                          {"value", v.str()},
                          {"threshold", a_table ? a_threshold(n) : b_threshold(n)}});
        j["rows"] = jr;
        std::cout << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << coeff_table_csv(rows, a_table);
    } else {
        std::cout << "   n    m        value  threshold\n";
        for (auto& [n, m, v] : rows)
            std::cout << std::setw(4) << n << ' ' << std::setw(4) << m << ' ' << std::setw(12)
                      << v.str() << "  " << std::setw(9)
                      << (a_table ? a_threshold(n) : b_threshold(n)) << "\n";
    }
    return 0;
}

int cmd_verify(const CliConfig& cfg) {
    std::vector<CheckLine> lines;
    if (cfg.suite == "exact" || cfg.suite == "all") {
        ExactSuiteOptions opt;
        opt.order = cfg.order;
        opt.route_order = cfg.order;
        opt.seed = cfg.seed;
        auto e = run_exact_suite(opt);
        lines.insert(lines.end(), e.begin(), e.end());
    }
    if (cfg.suite == "numeric" || cfg.suite == "all") {
        NumericSuiteOptions opt;
        opt.tol = cfg.tol;
        opt.seed = cfg.seed;
        auto n = run_numeric_suite(opt);
        lines.insert(lines.end(), n.begin(), n.end());
        auto l = run_limit_suite();
        lines.insert(lines.end(), l.begin(), l.end());
    }
    for (const auto& l : lines)
        std::cout << (l.pass ? "[PASS] " : "[FAIL] ") << l.name << " — " << l.detail << "\n";
    bool ok = all_pass(lines);
    std::cout << (ok ? "all checks passed" : "FAILURES present") << " (" << lines.size()
              << " checks)\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-series toolkit: partial/false theta Taylor coefficients, "
                 "partition tables, and modular transformation checks"};
    app.require_subcommand(1);

    CliConfig cfg;
    // --order falls back to QEIS_ORDER, then to the built-in default.
    app.add_option("--order", cfg.order, "q-expansion truncation order")
        ->envname("QEIS_ORDER")
        ->check(CLI::PositiveNumber);
    app.add_option("--k-max", cfg.k_max, "largest Taylor index k")->check(CLI::PositiveNumber);
    app.add_option("--n-max", cfg.n_max, "largest n in coefficient tables")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--tol", cfg.tol, "numeric tolerance")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "suite RNG seed");
    app.add_option("--suite", cfg.suite, "verification suite")
        ->check(CLI::IsMember({"exact", "numeric", "all"}));

    std::string run;
    for (const char* name : {"g", "h", "u", "G"})
        app.add_subcommand(name, std::string("print the ") + name + "_k q-expansions")
            ->callback([&run, name] { run = name; })
            ->fallthrough();
    app.add_subcommand("anm", "partial-theta Fourier coefficient table a(n,m)")
        ->callback([&run] { run = "anm"; })
        ->fallthrough();
    app.add_subcommand("bnm", "false-theta Fourier coefficient table b(n,m)")
        ->callback([&run] { run = "bnm"; })
        ->fallthrough();
    app.add_subcommand("verify", "run the identity / numeric verification suites")
        ->callback([&run] { run = "verify"; })
        ->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run == "anm" || run == "bnm") return cmd_coeff_table(run, cfg);
        if (run == "verify") return cmd_verify(cfg);
        return cmd_series(run, cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
