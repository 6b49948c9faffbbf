#include "mcharlier/json_io.hpp"

namespace mcharlier {

using nlohmann::json;

nlohmann::json params_to_json(const CharlierParams& params) {
    json sigma = json::array();
    for (const auto& s : params.sigma) sigma.push_back(to_string(s));
    return json{{"r", params.r}, {"sigma", sigma}};
}

CharlierParams params_from_json(const nlohmann::json& j) {
    std::vector<Rational> sigma;
    for (const auto& s : j.at("sigma")) sigma.push_back(parse_rational(s.get<std::string>()));
    return CharlierParams(j.at("r").get<int>(), std::move(sigma));
}

nlohmann::json table_to_json(const CharlierTable& table) {
    json entries = json::array();
    for (const auto& [n, p] : table.entries) {
        json coeffs = json::array();
        for (int i = 0; i <= std::max(p.degree(), 0); ++i)
            coeffs.push_back(to_string(p.coeff(static_cast<std::size_t>(i))));
        entries.push_back(json{{"index", n.entries}, {"coeffs", coeffs}});
    }
    return json{{"params", params_to_json(table.params)},
                {"max_total_degree", table.max_total_degree},
                {"entries", entries}};
}

CharlierTable table_from_json(const nlohmann::json& j) {
    CharlierTable table{params_from_json(j.at("params")),
                        j.at("max_total_degree").get<int>(),
                        {}};
    for (const auto& entry : j.at("entries")) {
        MultiIndex n(entry.at("index").get<std::vector<int>>());
        std::vector<Rational> coeffs;
        for (const auto& c : entry.at("coeffs"))
            coeffs.push_back(parse_rational(c.get<std::string>()));
        table.entries[n] = UniPoly(std::move(coeffs));
    }
    return table;
}

nlohmann::json series_to_json(const MSeries& f) {
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) {
        terms.push_back(json{{"exp", m.entries}, {"coeff", to_string(c)}});
    }
    return json{{"r", f.r()}, {"cutoff", f.cutoff()}, {"terms", terms}};
}

nlohmann::json report_to_json(const CheckReport& report) {
    json failures = json::array();
    for (const auto& f : report.failures) {
        json item{{"n", f.n.entries}, {"detail", f.detail}};
        if (f.i > 0) item["i"] = f.i;
        if (f.j > 0) item["j"] = f.j;
        if (f.l >= 0) item["l"] = f.l;
        failures.push_back(item);
    }
    return json{{"check", report.name},
                {"checked", report.checked},
                {"pass", report.pass()},
                {"failures", failures}};
}

nlohmann::json report_to_json(const OrthogonalityReport& report) {
    json items = json::array();
    for (const auto& item : report.items) {
        items.push_back(json{{"j", item.j},
                             {"l", item.l},
                             {"mantissa", to_string(item.value.mantissa())},
                             {"pass", item.pass}});
    }
    return json{{"check", "orthogonality"},
                {"n", report.n.entries},
                {"pass", report.pass()},
                {"items", items}};
}

nlohmann::json report_to_json(const InteriorReport& report, const CharlierParams& params) {
    json failures = json::array();
    for (const auto& f : report.failures) {
        failures.push_back(json{{"exp", f.exponent.entries},
                                {"lhs", to_string(f.lhs)},
                                {"rhs", to_string(f.rhs)}});
    }
    return json{{"check", report.check},
                {"params", params_to_json(params)},
                {"cutoff", report.cutoff},
                {"interior_degree", report.interior_degree},
                {"pass", report.pass()},
                {"failures", failures}};
}

} // namespace mcharlier
