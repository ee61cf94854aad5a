#pragma once

#include <json.hpp>

#include "qeis/numeric_modular.hpp"
#include "qeis/recursions.hpp"

namespace qeis {

using json = nlohmann::json;

// {"prefactor": "p/q", "order": N, "coeffs": [[n, "p/q"], ...]} sorted by
// degree, zero coefficients omitted.
json series_to_json(const QExpansion& f);
QExpansion series_from_json(const json& j);

json to_json(const RankHistogram& h);
json to_json(const RecursionReport& r);
json to_json(const IdentityReport& r);
json to_json(const HeatReport& r);
json to_json(const TransformReport& r);
json to_json(const LimitReport& r);

// CSV rows "n,m,value,threshold" for the coefficient tables.
std::string coeff_table_csv(const std::vector<std::tuple<int, int, Integer>>& rows,
                            bool a_table);

}  // namespace qeis
