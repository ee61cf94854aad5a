#include "qeis/serialize.hpp"

#include <sstream>

namespace qeis {

json series_to_json(const QExpansion& f) {
    json coeffs = json::array();
    for (int n = 0; n <= f.order(); ++n)
        if (f.coeff(n) != 0) coeffs.push_back({n, to_string(f.coeff(n))});
    return {{"prefactor", to_string(f.prefactor())}, {"order", f.order()}, {"coeffs", coeffs}};
}

QExpansion series_from_json(const json& j) {
    QExpansion f(j.at("order").get<int>(), parse_rational(j.at("prefactor").get<std::string>()));
    for (const auto& entry : j.at("coeffs"))
        f.set_coeff(entry.at(0).get<int>(), parse_rational(entry.at(1).get<std::string>()));
    return f;
}

json to_json(const RankHistogram& h) {
    json counts = json::array();
    for (auto& [rank, count] : h.counts) counts.push_back({rank, count});
    return {{"size", h.size}, {"counts", counts}};
}

json to_json(const RecursionReport& r) {
    return {{"identity", r.identity_name},
            {"order", r.order_checked},
            {"residual", to_string(r.max_abs_residual)},
            {"pass", r.pass}};
}

json to_json(const IdentityReport& r) {
    return {{"identity", r.name},
            {"order", r.order},
            {"residual", to_string(r.max_abs_residual)},
            {"pass", r.pass}};
}

json to_json(const HeatReport& r) {
    return {{"identity", r.name}, {"terms_checked", r.terms_checked}, {"pass", r.pass}};
}

namespace {

json cplx_to_json(cplx z) { return {z.real(), z.imag()}; }

}  // namespace

json to_json(const TransformReport& r) {
    return {{"name", r.name},
            {"gamma", {r.gamma.a, r.gamma.b, r.gamma.c, r.gamma.d}},
            {"sample",
             {{"z", cplx_to_json(r.sample.z)},
              {"tau", cplx_to_json(r.sample.tau)},
              {"w", cplx_to_json(r.sample.w)}}},
            {"residual", r.residual},
            {"pass", r.pass}};
}

json to_json(const LimitReport& r) {
    return {{"name", r.name}, {"gaps", r.gaps}, {"pass", r.pass}};
}

std::string coeff_table_csv(const std::vector<std::tuple<int, int, Integer>>& rows, bool a_table) {
    std::ostringstream out;
    out << "n,m,value,threshold\n";
    for (const auto& [n, m, v] : rows)
        out << n << ',' << m << ',' << v.str() << ',' << (a_table ? a_threshold(n) : b_threshold(n))
            << '\n';
    return out.str();
}

}  // namespace qeis
