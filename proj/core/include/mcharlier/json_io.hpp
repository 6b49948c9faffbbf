#pragma once

#include "mcharlier/charlier.hpp"
#include "mcharlier/fock.hpp"
#include "mcharlier/series.hpp"

#include <json.hpp>

namespace mcharlier {

nlohmann::json params_to_json(const CharlierParams& params);
CharlierParams params_from_json(const nlohmann::json& j);

// {params, max_total_degree, entries: [{index, coeffs}]}, graded-lex order.
nlohmann::json table_to_json(const CharlierTable& table);
CharlierTable table_from_json(const nlohmann::json& j);

// {r, cutoff, terms: [{exp, coeff}]}, graded-lex order.
nlohmann::json series_to_json(const MSeries& f);

nlohmann::json report_to_json(const CheckReport& report);
nlohmann::json report_to_json(const OrthogonalityReport& report);
nlohmann::json report_to_json(const InteriorReport& report, const CharlierParams& params);

} // namespace mcharlier
