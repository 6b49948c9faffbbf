// Command-line front end: exact evaluation, table emission, verification
// suites over the polynomial and operator identities, and a benchmark
// comparing the three computation strategies.

#include "mcharlier/charlier.hpp"
#include "mcharlier/fock.hpp"
#include "mcharlier/json_io.hpp"
#include "mcharlier/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace mcharlier;
using nlohmann::json;

namespace {

struct RunConfig {
    int r = 2;
    std::vector<std::string> sigma_strings = {"1/2", "3/2"};
    int nmax = 5;
    int kmax = 6;
    int cutoff = 8;
    std::string format = "text";
    int jobs = 1;
    unsigned long seed = 0;
    std::string out_path;
    std::string corrupt; // "n1,n2,..:power" testing aid, perturbs one coefficient

    std::vector<Rational> sigma() const {
        std::vector<Rational> s;
        for (const auto& t : sigma_strings) s.push_back(parse_rational(t));
        return s;
    }

    CharlierParams params() const { return CharlierParams(r, sigma()); }

    void validate() const {
        params(); // throws on bad r/sigma
        if (nmax < 0 || kmax < 0) throw std::invalid_argument("nmax/kmax must be >= 0");
        if (cutoff < nmax) throw std::invalid_argument("cutoff must be >= nmax");
        if (kmax > cutoff) throw std::invalid_argument("kmax must be <= cutoff");
        if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
    }
};

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void apply_corruption(CharlierTable& table, const std::string& spec) {
    const auto colon = spec.find(':');
    const auto idx = parse_int_list(spec.substr(0, colon));
    const int power = colon == std::string::npos ? 0 : std::stoi(spec.substr(colon + 1));
    MultiIndex n(idx);
    auto it = table.entries.find(n);
    if (it == table.entries.end())
        throw std::invalid_argument("corrupt: no table entry " + n.str());
    auto coeffs = it->second.coeffs();
    if (power >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<std::size_t>(power) + 1, Rational(0));
    coeffs[static_cast<std::size_t>(power)] += 1;
    it->second = UniPoly(std::move(coeffs));
}

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::size_t checked = 0;
    json detail;
};

void add_report(std::vector<SuiteResult>& results, const CheckReport& report) {
    results.push_back({report.name, report.pass(), report.checked, report_to_json(report)});
}

void add_report(std::vector<SuiteResult>& results, const InteriorReport& report,
                const CharlierParams& params, const std::string& label) {
    results.push_back({label, report.pass(), report.coefficients_checked,
                       report_to_json(report, params)});
}

void run_orthogonality(const RunConfig& config, const CharlierTable& table,
                       std::vector<SuiteResult>& results) {
    const auto lattice = indices_up_to(config.r, config.nmax);
    std::vector<OrthogonalityReport> reports(lattice.size());

    const int jobs = std::min<int>(config.jobs, static_cast<int>(lattice.size()) > 0
                                                    ? static_cast<int>(lattice.size())
                                                    : 1);
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            for (std::size_t idx = static_cast<std::size_t>(w); idx < lattice.size();
                 idx += static_cast<std::size_t>(jobs)) {
                reports[idx] = check_orthogonality(lattice[idx], table);
            }
        });
    }
    for (auto& t : workers) t.join();

    bool pass = true;
    std::size_t checked = 0;
    json failing = json::array();
    for (const auto& report : reports) {
        checked += report.items.size();
        if (!report.pass()) {
            pass = false;
            failing.push_back(report_to_json(report));
        }
    }
    results.push_back({"orthogonality", pass, checked,
                       json{{"check", "orthogonality"}, {"pass", pass},
                            {"checked", checked}, {"failures", failing}}});
}

void run_rij(const RunConfig& config, const CharlierTable& table,
             std::vector<SuiteResult>& results) {
    for (int i = 1; i <= config.r; ++i) {
        for (int j = i + 1; j <= config.r; ++j) {
            auto rij = check_rij_polynomial(table, i, j);
            json detail = report_to_json(rij.corrected);
            detail["printed_variant_holds"] = rij.printed_variant.pass();
            std::ostringstream label;
            label << "rij(" << i << "," << j << ")";
            results.push_back({label.str(), rij.corrected.pass(),
                               rij.corrected.checked, detail});
        }
    }
}

void run_fock(const RunConfig& config, std::vector<SuiteResult>& results) {
    const auto params = config.params();
    const int d = config.cutoff;

    for (int i = 1; i <= config.r; ++i) {
        for (int j = i + 1; j <= config.r; ++j) {
            std::ostringstream label;
            label << "commutator_HH(" << i << "," << j << ")";
            add_report(results, check_commutator_HH(i, j, params, d), params, label.str());
        }
    }
    for (int i = 1; i <= config.r; ++i) {
        for (int k = 0; k <= std::min(config.kmax, d - 1); ++k) {
            std::ostringstream label;
            label << "eigen(H" << i << ",k=" << k << ")";
            add_report(results, check_eigen(i, k, params, d), params, label.str());
        }
        std::ostringstream label;
        label << "similarity(H" << i << ")";
        add_report(results, check_similarity(i, params, d), params, label.str());
    }
    for (int j = 1; j <= config.r; ++j) {
        for (int k = 1; k <= std::min(config.kmax, d); ++k) {
            std::ostringstream label;
            label << "ladder_X(" << j << ",k=" << k << ")";
            add_report(results, check_ladder_X(j, k, params, d), params, label.str());
        }
    }
    for (int k = 0; k <= std::min(config.kmax, d - 1); ++k) {
        std::ostringstream label;
        label << "ladder_Y(k=" << k << ")";
        add_report(results, check_ladder_Y(k, params, d), params, label.str());
    }
    std::vector<int> k_list;
    for (int k = 0; k <= std::min(config.kmax, d); ++k) k_list.push_back(k);
    for (int i = 1; i <= config.r; ++i) {
        for (int j = i + 1; j <= config.r; ++j) {
            std::ostringstream label;
            label << "symmetry_R(" << i << "," << j << ")";
            add_report(results, check_R(i, j, k_list, params, d), params, label.str());
        }
    }

    // Squared-norm bookkeeping for the symmetric states and the ledger.
    bool norms_pass = true;
    std::size_t norms_checked = 0;
    for (int k = 0; k <= std::min(config.kmax, d); ++k) {
        const Rational nw = bargmann_norm_sq(state_w(k, config.r, d));
        norms_pass = norms_pass &&
                     nw == factorial(static_cast<unsigned>(k)) * pow_int(Rational(config.r), k);
        ++norms_checked;
        if (k >= 1) {
            const Rational prev = bargmann_norm_sq(state_w(k - 1, config.r, d));
            norms_pass = norms_pass && Rational(k) * k * prev / nw == Rational(k, config.r);
            const auto ratio = normalization_sq(k - 1, config.r) / normalization_sq(k, config.r);
            norms_pass = norms_pass &&
                         ratio == ScaledScalar(Rational(config.r) * k,
                                               std::vector<long>(static_cast<std::size_t>(config.r), 0));
            norms_checked += 2;
        }
        if (k + 1 <= d) {
            const Rational next = bargmann_norm_sq(state_w(k + 1, config.r, d));
            norms_pass = norms_pass && next / nw == Rational(config.r) * (k + 1);
            ++norms_checked;
        }
    }
    results.push_back({"norm_bookkeeping", norms_pass, norms_checked,
                       json{{"check", "norm_bookkeeping"}, {"pass", norms_pass},
                            {"checked", norms_checked}, {"failures", json::array()}}});
}

void run_psi(const RunConfig& config, std::vector<SuiteResult>& results) {
    const auto sigma = config.sigma();
    bool pass = true;
    std::size_t checked = 0;
    json failures = json::array();
    const int lim = std::min(config.kmax, config.cutoff - 1);
    for (int n = 0; n <= lim; ++n) {
        for (int k = 0; k <= lim; ++k) {
            try {
                psi_rationalized(n, k, sigma[0], config.cutoff);
            } catch (const std::logic_error& e) {
                pass = false;
                failures.push_back(json{{"n", n}, {"k", k}, {"error", e.what()}});
            }
            ++checked;
        }
    }
    results.push_back({"psi", pass, checked,
                       json{{"check", "psi"}, {"pass", pass}, {"checked", checked},
                            {"failures", failures}}});
}

int emit_results(const RunConfig& config, const std::vector<SuiteResult>& results) {
    Output out(config.out_path);
    bool all_pass = true;
    for (const auto& r : results) all_pass = all_pass && r.pass;

    if (config.format == "json") {
        json doc = json::array();
        for (const auto& r : results) doc.push_back(r.detail);
        out.stream() << doc.dump(2) << "\n";
    } else if (config.format == "csv") {
        out.stream() << "check,checked,pass\n";
        for (const auto& r : results)
            out.stream() << r.name << "," << r.checked << "," << (r.pass ? "1" : "0") << "\n";
    } else {
        for (const auto& r : results) {
            out.stream() << (r.pass ? "PASS " : "FAIL ") << r.name
                         << " (" << r.checked << " checks)\n";
        }
        out.stream() << (all_pass ? "all suites passed" : "FAILURES present") << "\n";
    }
    return all_pass ? 0 : 1;
}

int cmd_eval(const RunConfig& config, const std::string& n_spec, int k) {
    const auto params = config.params();
    MultiIndex n(parse_int_list(n_spec));
    if (n.size() != config.r) throw std::invalid_argument("index size must equal r");
    if (n.total() > config.nmax) throw std::invalid_argument("|n| exceeds nmax");
    if (k > config.kmax || k < 0) throw std::invalid_argument("k out of range");

    const auto table = build_table(params, config.nmax);
    const Rational via_recurrence = table.at(n).eval(Rational(k));
    const Rational via_explicit = eval_explicit(n, params).eval(Rational(k));
    Rational via_genfunc = gen_lhs(k, params, config.cutoff).coeff(n);
    for (int i = 0; i < config.r; ++i)
        via_genfunc *= factorial(static_cast<unsigned>(n[i]));

    const bool agree = via_recurrence == via_explicit && via_explicit == via_genfunc;
    Output out(config.out_path);
    if (config.format == "json") {
        out.stream() << json{{"n", n.entries},
                             {"k", k},
                             {"value", to_string(via_recurrence)},
                             {"recurrence", to_string(via_recurrence)},
                             {"explicit", to_string(via_explicit)},
                             {"genfunc", to_string(via_genfunc)},
                             {"agree", agree}}
                            .dump(2)
                     << "\n";
    } else {
        out.stream() << "C_" << n.str() << "(" << k << ") = " << to_string(via_recurrence)
                     << "  [methods " << (agree ? "agree" : "DISAGREE") << "]\n";
    }
    if (!agree) {
        std::cerr << "method disagreement for " << n.str() << " at k=" << k << "\n";
        return 2;
    }
    return 0;
}

int cmd_verify(const RunConfig& config, const std::string& suite) {
    const auto params = config.params();
    std::vector<SuiteResult> results;

    const bool needs_table = suite == "orthogonality" || suite == "compatibility" ||
                             suite == "backward" || suite == "forward" ||
                             suite == "difference" || suite == "rij" || suite == "all";
    CharlierTable table{params, 0, {}};
    if (needs_table) {
        table = build_table(params, config.nmax);
        if (!config.corrupt.empty()) apply_corruption(table, config.corrupt);
    }

    if (suite == "orthogonality" || suite == "all") run_orthogonality(config, table, results);
    if (suite == "compatibility" || suite == "all") add_report(results, check_compatibility(table));
    if (suite == "backward" || suite == "all") add_report(results, check_backward(table));
    if (suite == "forward" || suite == "all") add_report(results, check_forward(table));
    if (suite == "difference" || suite == "all")
        add_report(results, check_combined_difference(table));
    if (suite == "rij" || suite == "all") run_rij(config, table, results);
    if (suite == "fock" || suite == "all") run_fock(config, results);
    if (suite == "psi" || suite == "all") run_psi(config, results);

    if (results.empty()) throw std::invalid_argument("unknown suite: " + suite);
    return emit_results(config, results);
}

int cmd_table(const RunConfig& config) {
    const auto table = build_table(config.params(), config.nmax);
    Output out(config.out_path);
    if (config.format == "json") {
        out.stream() << table_to_json(table).dump(2) << "\n";
    } else if (config.format == "csv") {
        for (int i = 1; i <= config.r; ++i) out.stream() << "n" << i << ",";
        for (int k = 0; k <= config.kmax; ++k)
            out.stream() << "k=" << k << (k == config.kmax ? "" : ",");
        out.stream() << "\n";
        for (const auto& [n, p] : table.entries) {
            for (int i = 0; i < config.r; ++i) out.stream() << n[i] << ",";
            for (int k = 0; k <= config.kmax; ++k)
                out.stream() << to_string(p.eval(Rational(k)))
                             << (k == config.kmax ? "" : ",");
            out.stream() << "\n";
        }
    } else {
        for (const auto& [n, p] : table.entries)
            out.stream() << "C_" << n.str() << " = " << p.str() << "\n";
    }
    return 0;
}

std::size_t rational_bits(const Rational& q) {
    using boost::multiprecision::msb;
    const Integer num = abs(numerator(q));
    const Integer den = denominator(q);
    std::size_t bits = 0;
    if (num != 0) bits += static_cast<std::size_t>(msb(num)) + 1;
    bits += static_cast<std::size_t>(msb(den)) + 1;
    return bits;
}

int cmd_bench(const RunConfig& config, std::vector<std::string> strategies) {
    if (strategies.empty())
        strategies = {"recurrence", "explicit", "genfunc"};
    const auto params = config.params();
    using clock = std::chrono::steady_clock;

    struct Row {
        std::string strategy;
        int nmax;
        double millis;
        std::size_t peak_bits;
    };
    std::vector<Row> rows;

    for (int nm = 1; nm <= config.nmax; ++nm) {
        const auto lattice = indices_up_to(config.r, nm);
        const int kmax = std::min(config.kmax, config.cutoff);
        // values[strategy][index position][k]
        std::map<std::string, std::vector<std::vector<Rational>>> values;

        for (const auto& strategy : strategies) {
            const auto start = clock::now();
            std::size_t peak = 0;
            std::vector<std::vector<Rational>> vals(lattice.size());

            if (strategy == "recurrence") {
                const auto table = build_table(params, nm);
                for (std::size_t i = 0; i < lattice.size(); ++i) {
                    const auto& p = table.at(lattice[i]);
                    for (const auto& c : p.coeffs()) peak = std::max(peak, rational_bits(c));
                    for (int k = 0; k <= kmax; ++k) vals[i].push_back(p.eval(Rational(k)));
                }
            } else if (strategy == "explicit") {
                for (std::size_t i = 0; i < lattice.size(); ++i) {
                    const auto p = eval_explicit(lattice[i], params);
                    for (const auto& c : p.coeffs()) peak = std::max(peak, rational_bits(c));
                    for (int k = 0; k <= kmax; ++k) vals[i].push_back(p.eval(Rational(k)));
                }
            } else if (strategy == "genfunc") {
                for (int k = 0; k <= kmax; ++k) {
                    const auto g = gen_lhs(k, params, nm);
                    for (std::size_t i = 0; i < lattice.size(); ++i) {
                        Rational v = g.coeff(lattice[i]);
                        for (int d = 0; d < config.r; ++d)
                            v *= factorial(static_cast<unsigned>(lattice[i][d]));
                        peak = std::max(peak, rational_bits(v));
                        vals[i].push_back(v);
                    }
                }
            } else {
                throw std::invalid_argument("unknown strategy: " + strategy);
            }

            const double ms =
                std::chrono::duration<double, std::milli>(clock::now() - start).count();
            rows.push_back({strategy, nm, ms, peak});
            values[strategy] = std::move(vals);
        }

        // Cross-strategy agreement gates the report.
        const auto& reference = values.begin()->second;
        for (const auto& [name, vals] : values) {
            if (vals != reference) {
                std::cerr << "bench: strategy disagreement at nmax=" << nm
                          << " between " << values.begin()->first << " and " << name << "\n";
                return 2;
            }
        }
    }

    Output out(config.out_path);
    if (config.format == "json") {
        json doc = json::array();
        for (const auto& row : rows)
            doc.push_back(json{{"strategy", row.strategy},
                               {"nmax", row.nmax},
                               {"millis", row.millis},
                               {"peak_coeff_bits", row.peak_bits}});
        out.stream() << doc.dump(2) << "\n";
    } else {
        out.stream() << "strategy,nmax,millis,peak_coeff_bits\n";
        for (const auto& row : rows)
            out.stream() << row.strategy << "," << row.nmax << "," << row.millis << ","
                         << row.peak_bits << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact multiple Charlier polynomial engine"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    app.add_option("--r", config.r, "number of directions");
    app.add_option("--sigma", config.sigma_strings,
                   "comma-separated Poisson parameters as p/q strings")
        ->delimiter(',');
    app.add_option("--nmax", config.nmax, "maximum total degree of the lattice");
    app.add_option("--kmax", config.kmax, "maximum spectral point k");
    app.add_option("--cutoff", config.cutoff, "series truncation degree D");
    app.add_option("--format", config.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--jobs", config.jobs, "parallelism cap for fan-out suites");
    app.add_option("--seed", config.seed, "seed recorded for randomized runs");
    app.add_option("--out", config.out_path, "output path (default stdout)");
    app.add_option("--corrupt", config.corrupt,
                   "testing aid: 'n1,..,nr:power' adds 1 to one table coefficient");

    std::string n_spec = "0,0";
    int k = 0;
    auto* eval = app.add_subcommand("eval", "evaluate C_n(k) by all three methods");
    eval->add_option("--n", n_spec, "multi-index, comma separated")->required();
    eval->add_option("--k", k, "spectral point")->required();

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", suite, "suite name")
        ->check(CLI::IsMember({"orthogonality", "compatibility", "backward", "forward",
                               "difference", "rij", "fock", "psi", "all"}));

    auto* table = app.add_subcommand("table", "emit the polynomial table");

    std::vector<std::string> strategies;
    auto* bench = app.add_subcommand("bench", "time the three computation strategies");
    bench->add_option("--strategies", strategies, "subset of recurrence,explicit,genfunc")
        ->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        config.validate();
        if (eval->parsed()) return cmd_eval(config, n_spec, k);
        if (verify->parsed()) return cmd_verify(config, suite);
        if (table->parsed()) return cmd_table(config);
        if (bench->parsed()) return cmd_bench(config, strategies);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
