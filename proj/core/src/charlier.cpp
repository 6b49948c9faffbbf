#include "mcharlier/charlier.hpp"

#include <sstream>
#include <stdexcept>

namespace mcharlier {

const UniPoly& CharlierTable::at(const MultiIndex& n) const {
    auto it = entries.find(n);
    if (it == entries.end())
        throw std::out_of_range("no table entry for " + n.str());
    return it->second;
}

CharlierTable build_table(const CharlierParams& params, int max_total_degree) {
    if (max_total_degree < 0) throw std::invalid_argument("max_total_degree < 0");
    CharlierTable table{params, max_total_degree, {}};
    table.entries[MultiIndex::zero(params.r)] = UniPoly::constant(1);

    const UniPoly k = UniPoly::variable();
    for (int shell = 1; shell <= max_total_degree; ++shell) {
        for (const auto& n : indices_with_total(params.r, shell)) {
            int j = 1;
            while (n[j - 1] == 0) ++j;
            const MultiIndex m = n.minus(j); // previous shell
            UniPoly p = (k - UniPoly::constant(params.sigma_at(j) + m.total())) * table.at(m);
            for (int i = 1; i <= params.r; ++i) {
                if (m[i - 1] == 0) continue;
                p = p - table.at(m.minus(i)) * (params.sigma_at(i) * m[i - 1]);
            }
            table.entries[n] = std::move(p);
        }
    }
    return table;
}

UniPoly eval_explicit(const MultiIndex& n, const CharlierParams& params) {
    const int r = params.r;
    if (n.size() != r) throw std::invalid_argument("multi-index size mismatch");

    // (-k)_m as polynomials in k, m = 0..|n|.
    std::vector<UniPoly> negk_poch{UniPoly::constant(1)};
    for (int m = 1; m <= n.total(); ++m) {
        negk_poch.push_back(negk_poch.back() *
                            UniPoly({Rational(m - 1), Rational(-1)}));
    }

    UniPoly result;
    std::vector<int> l(static_cast<std::size_t>(r), 0);
    while (true) {
        Rational scalar = 1;
        int ltot = 0;
        for (int i = 0; i < r; ++i) {
            scalar *= pochhammer(Rational(-n[i]), static_cast<unsigned>(l[i]));
            scalar *= pow_int(-params.sigma[i], n[i] - l[i]);
            scalar /= factorial(static_cast<unsigned>(l[i]));
            ltot += l[i];
        }
        if (scalar != 0) result = result + negk_poch[static_cast<std::size_t>(ltot)] * scalar;

        int pos = 0;
        while (pos < r && l[pos] == n[pos]) {
            l[pos] = 0;
            ++pos;
        }
        if (pos == r) break;
        ++l[pos];
    }
    return result;
}

UniPoly monic_charlier(int n, const Rational& sigma) {
    if (sigma == 0) throw std::invalid_argument("monic_charlier: sigma must be nonzero");
    std::vector<UniPoly> negk_poch{UniPoly::constant(1)};
    for (int m = 1; m <= n; ++m) {
        negk_poch.push_back(negk_poch.back() * UniPoly({Rational(m - 1), Rational(-1)}));
    }
    UniPoly sum;
    for (int s = 0; s <= n; ++s) {
        Rational c = pochhammer(Rational(-n), static_cast<unsigned>(s)) /
                     factorial(static_cast<unsigned>(s)) *
                     pow_int(-1 / sigma, s);
        sum = sum + negk_poch[static_cast<std::size_t>(s)] * c;
    }
    return sum * pow_int(-sigma, n);
}

ScaledScalar poisson_functional(int j, const UniPoly& p, const CharlierParams& params) {
    if (j < 1 || j > params.r) throw std::invalid_argument("direction out of range");
    const Rational& s = params.sigma_at(j);
    Rational mantissa = 0;
    Rational spow = 1;
    const auto c = p.to_falling_factorial();
    for (std::size_t m = 0; m < c.size(); ++m) {
        mantissa += c[m] * spow;
        spow *= s;
    }
    std::vector<long> expo(static_cast<std::size_t>(params.r), 0);
    expo[static_cast<std::size_t>(j - 1)] = 1;
    return ScaledScalar(std::move(mantissa), std::move(expo));
}

ScaledScalar normalization_sq(int k, int r) {
    std::vector<long> expo(static_cast<std::size_t>(r), 0);
    expo[0] = -2;
    Rational mant = 1 / (factorial(static_cast<unsigned>(k)) * pow_int(Rational(r), k));
    return ScaledScalar(std::move(mant), std::move(expo));
}

bool OrthogonalityReport::pass() const {
    for (const auto& item : items) {
        if (!item.pass) return false;
    }
    return true;
}

OrthogonalityReport check_orthogonality(const MultiIndex& n, const CharlierTable& table) {
    OrthogonalityReport report{n, {}};
    const UniPoly& c = table.at(n);
    const UniPoly k = UniPoly::variable();
    for (int j = 1; j <= table.params.r; ++j) {
        UniPoly weighted = c;
        for (int l = 0; l < n[j - 1]; ++l) {
            auto value = poisson_functional(j, weighted, table.params);
            report.items.push_back({j, l, value, value.is_zero()});
            weighted = weighted * k;
        }
    }
    return report;
}

namespace {

void record(CheckReport& report, const MultiIndex& n, int i, int j,
            const UniPoly& residual) {
    ++report.checked;
    if (!residual.is_zero()) {
        report.failures.push_back({n, i, j, -1, "residual " + residual.str()});
    }
}

} // namespace

CheckReport check_compatibility(const CharlierTable& table) {
    CheckReport report{"compatibility", 0, {}};
    const auto& params = table.params;
    for (const auto& n : indices_up_to(params.r, table.max_total_degree - 1)) {
        for (int i = 1; i <= params.r; ++i) {
            for (int j = i + 1; j <= params.r; ++j) {
                UniPoly residual = table.at(n.plus(i)) - table.at(n.plus(j)) +
                                   table.at(n) * (params.sigma_at(i) - params.sigma_at(j));
                record(report, n, i, j, residual);
            }
        }
    }
    return report;
}

CheckReport check_backward(const CharlierTable& table) {
    CheckReport report{"backward", 0, {}};
    const auto& params = table.params;
    const UniPoly k = UniPoly::variable();
    for (const auto& n : indices_up_to(params.r, table.max_total_degree - 1)) {
        const UniPoly lhs = k * table.at(n).shift(-1);
        for (int j = 1; j <= params.r; ++j) {
            UniPoly residual = lhs - table.at(n.plus(j)) - table.at(n) * params.sigma_at(j);
            record(report, n, 0, j, residual);
        }
    }
    return report;
}

CheckReport check_forward(const CharlierTable& table) {
    CheckReport report{"forward", 0, {}};
    const auto& params = table.params;
    for (const auto& [n, c] : table.entries) {
        UniPoly residual = c.shift(1) - c;
        for (int j = 1; j <= params.r; ++j) {
            if (n[j - 1] == 0) continue;
            residual = residual - table.at(n.minus(j)) * Rational(n[j - 1]);
        }
        record(report, n, 0, 0, residual);
    }
    return report;
}

CheckReport check_combined_difference(const CharlierTable& table) {
    CheckReport report{"combined_difference", 0, {}};
    const auto& params = table.params;
    const UniPoly k = UniPoly::variable();
    for (const auto& [n, c] : table.entries) {
        UniPoly residual =
            k * c.shift(-1) - (k - UniPoly::constant(n.total())) * c;
        for (int i = 1; i <= params.r; ++i) {
            if (n[i - 1] == 0) continue;
            residual = residual + table.at(n.minus(i)) * (params.sigma_at(i) * n[i - 1]);
        }
        record(report, n, 0, 0, residual);
    }
    return report;
}

RijReport check_rij_polynomial(const CharlierTable& table, int i, int j) {
    if (i == j) throw std::invalid_argument("check_rij_polynomial: i must differ from j");
    const auto& params = table.params;
    RijReport out{{"rij_corrected", 0, {}}, {"rij_printed", 0, {}}};

    for (const auto& n : indices_up_to(params.r, table.max_total_degree - 1)) {
        // Shared tail of both variants.
        UniPoly tail =
            table.at(n) * (Rational(n[i - 1] - n[j - 1]) + params.sigma_at(i) -
                           params.sigma_at(j)) +
            table.at(n.plus(i)) - table.at(n.plus(j));
        for (int s = 1; s <= params.r; ++s) {
            if (n[s - 1] == 0) continue;
            tail = tail + table.at(n.minus(s)) *
                              ((params.sigma_at(i) - params.sigma_at(j)) * n[s - 1]);
        }

        UniPoly corrected = tail;
        for (int s = 1; s <= params.r; ++s) {
            if (s != i && n[s - 1] != 0)
                corrected = corrected +
                            table.at(n.plus(i).minus(s)) * Rational(n[s - 1]);
            if (s != j && n[s - 1] != 0)
                corrected = corrected -
                            table.at(n.plus(j).minus(s)) * Rational(n[s - 1]);
        }
        record(out.corrected, n, i, j, corrected);

        UniPoly printed = tail;
        for (int s = 1; s <= params.r; ++s) {
            if (s != i && n[i - 1] != 0)
                printed = printed + table.at(n.plus(s).minus(i)) * Rational(n[i - 1]);
            if (s != j && n[j - 1] != 0)
                printed = printed - table.at(n.plus(s).minus(j)) * Rational(n[j - 1]);
        }
        record(out.printed_variant, n, i, j, printed);
    }
    return out;
}

} // namespace mcharlier
