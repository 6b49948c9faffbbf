// Acceptance suite: one pass/fail line per criterion, exit nonzero if any
// criterion fails. All value checks are exact (zero tolerance).

#include "mcharlier/charlier.hpp"
#include "mcharlier/fock.hpp"
#include "mcharlier/series.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <vector>

using namespace mcharlier;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::cout << "  exception: " << e.what() << "\n";
        ok = false;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << label
              << " (" << secs << " s)\n";
    if (!ok) ++failures;
}

std::vector<CharlierParams> standard_configs() {
    return {
        CharlierParams(1, {parse_rational("1/2")}),
        CharlierParams(2, {parse_rational("1/2"), parse_rational("3/2")}),
        CharlierParams(3, {parse_rational("1/3"), parse_rational("1"), parse_rational("5/2")}),
    };
}

bool three_way_agreement() {
    for (const auto& params : standard_configs()) {
        const int nmax = 6;
        const auto table = build_table(params, nmax);
        for (const auto& [n, p] : table.entries) {
            if (eval_explicit(n, params) != p) return false;
        }
        for (int k = 0; k <= 6; ++k) {
            const auto g = gen_lhs(k, params, nmax);
            for (const auto& [n, p] : table.entries) {
                Rational c = g.coeff(n);
                for (int i = 0; i < params.r; ++i)
                    c *= factorial(static_cast<unsigned>(n[i]));
                if (c != p.eval(Rational(k))) return false;
            }
        }
    }
    return true;
}

bool orthogonality() {
    for (const auto& params : standard_configs()) {
        const auto table = build_table(params, 5);
        for (const auto& [n, p] : table.entries) {
            if (!check_orthogonality(n, table).pass()) return false;
        }
    }
    return true;
}

bool polynomial_identities() {
    for (const auto& params : standard_configs()) {
        // One shell above 6 so that every relation is exercised at |n| <= 6.
        const auto table = build_table(params, 7);
        if (!check_compatibility(table).pass()) return false;
        if (!check_backward(table).pass()) return false;
        if (!check_forward(table).pass()) return false;
        if (!check_combined_difference(table).pass()) return false;
        for (int i = 1; i <= params.r; ++i) {
            for (int j = 1; j <= params.r; ++j) {
                if (i == j) continue;
                if (!check_rij_polynomial(table, i, j).corrected.pass()) return false;
            }
        }
    }
    return true;
}

bool classical_reduction() {
    for (const Rational& sigma :
         {parse_rational("1/2"), parse_rational("1"), parse_rational("3")}) {
        const CharlierParams params(1, {sigma});
        const auto table = build_table(params, 10);
        for (int n = 0; n <= 10; ++n) {
            if (!(table.at(MultiIndex({n})) == monic_charlier(n, sigma))) return false;
        }
        for (int n = 0; n <= 10; ++n) {
            for (int k = 0; k <= 10; ++k) {
                // psi_rationalized throws if the closed form or the
                // rationalized recurrence fails.
                psi_rationalized(n, k, sigma, 12);
            }
        }
    }
    return true;
}

bool operator_suite() {
    const int d = 8;
    const std::vector<CharlierParams> configs{
        CharlierParams(2, {parse_rational("1/2"), parse_rational("3/2")}),
        CharlierParams(3, {parse_rational("1/3"), parse_rational("1"), parse_rational("5/2")}),
    };
    const std::vector<int> ks{0, 1, 2, 3, 4, 5};
    for (const auto& params : configs) {
        const int r = params.r;
        // Canonical commutators [d_i, z_j] = delta_ij.
        for (int i = 1; i <= r; ++i) {
            for (int j = 1; j <= r; ++j) {
                const FockOp comm = op_commutator(op_diff(r, i), op_mul_var(r, j));
                const Rational delta = i == j ? 1 : 0;
                for (const auto& m : indices_up_to(r, d - 1)) {
                    MSeries basis(r, d);
                    basis.set_coeff(m, Rational(1));
                    if (!(comm(basis) - basis * delta).vanishes_up_to(d - 1)) return false;
                }
            }
        }
        for (int i = 1; i <= r; ++i) {
            for (int j = i + 1; j <= r; ++j) {
                if (!check_commutator_HH(i, j, params, d).pass()) return false;
                if (!check_R(i, j, ks, params, d).pass()) return false;
            }
            if (!check_similarity(i, params, d).pass()) return false;
            for (int k = 0; k <= 5; ++k) {
                if (!check_eigen(i, k, params, d).pass()) return false;
                if (k >= 1 && !check_ladder_X(i, k, params, d).pass()) return false;
            }
        }
        for (int k = 0; k <= 5; ++k) {
            if (!check_ladder_Y(k, params, d).pass()) return false;
        }
    }
    return true;
}

bool norm_bookkeeping() {
    for (int r = 1; r <= 3; ++r) {
        for (int k = 0; k <= 8; ++k) {
            const Rational nk = bargmann_norm_sq(state_w(k, r, 10));
            if (nk != factorial(static_cast<unsigned>(k)) * pow_int(Rational(r), k))
                return false;
            if (k >= 1) {
                const Rational prev = bargmann_norm_sq(state_w(k - 1, r, 10));
                if (Rational(k) * k * prev / nk != Rational(k, r)) return false;
                const auto ratio = normalization_sq(k - 1, r) / normalization_sq(k, r);
                if (ratio != ScaledScalar(Rational(r) * k,
                                          std::vector<long>(static_cast<std::size_t>(r), 0)))
                    return false;
            }
            const Rational next = bargmann_norm_sq(state_w(k + 1, r, 10));
            if (next / nk != Rational(r) * (k + 1)) return false;
        }
    }
    return true;
}

int run_cli(const std::string& args) {
    const std::string cmd =
        std::string(MCHARLIER_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool negative_control() {
    // The uncorrupted run must pass, the corrupted one must be detected.
    if (run_cli("--r 2 --sigma 1/2,3/2 --nmax 4 --kmax 4 --cutoff 6 "
                "verify --suite all") != 0)
        return false;
    return run_cli("--r 2 --sigma 1/2,3/2 --nmax 4 --kmax 4 --cutoff 6 "
                   "--corrupt 1,1:1 verify --suite all") != 0;
}

bool benchmark_agreement() {
    return run_cli("--r 2 --sigma 1/2,3/2 --nmax 8 --kmax 6 --cutoff 8 bench") == 0;
}

} // namespace

int main() {
    criterion(1, "three-way agreement (recurrence, explicit, generating function)",
              three_way_agreement);
    criterion(2, "orthogonality mantissas exactly zero", orthogonality);
    criterion(3, "polynomial identities as exact zero polynomials", polynomial_identities);
    criterion(4, "classical r=1 reduction and rationalized matrix elements",
              classical_reduction);
    criterion(5, "operator suite at cutoff 8, interior-exact", operator_suite);
    criterion(6, "squared-norm bookkeeping", norm_bookkeeping);
    criterion(7, "negative control: injected corruption detected", negative_control);
    criterion(8, "benchmark with cross-strategy agreement", benchmark_agreement);

    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
