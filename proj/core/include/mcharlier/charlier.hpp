#pragma once

#include "mcharlier/params.hpp"
#include "mcharlier/unipoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace mcharlier {

// All polynomials C_n with |n| <= max_total_degree for fixed parameters,
// generated shell by shell from the nearest-neighbor recurrence. Entries
// are monic of degree |n|; the zero index maps to the constant 1.
struct CharlierTable {
    CharlierParams params;
    int max_total_degree = 0;
    std::map<MultiIndex, UniPoly> entries;

    bool contains(const MultiIndex& n) const { return entries.count(n) != 0; }
    const UniPoly& at(const MultiIndex& n) const;
};

CharlierTable build_table(const CharlierParams& params, int max_total_degree);

// Direct evaluation of the closed-form multiple sum; independent of the
// recurrence route.
UniPoly eval_explicit(const MultiIndex& n, const CharlierParams& params);

// Monic Charlier polynomial via the terminating 2F0 sum; sigma != 0.
UniPoly monic_charlier(int n, const Rational& sigma);

// Exact Poisson sum sum_k p(k) sigma_j^k / k!, evaluated through the
// falling-factorial moments sum_k (k)_m sigma^k/k! = sigma^m e^sigma.
// Result carries exponent vector e_j.
ScaledScalar poisson_functional(int j, const UniPoly& p, const CharlierParams& params);

// Squared normalization N_k^2 = e^{-2 sigma_1} / (k! r^k).
ScaledScalar normalization_sq(int k, int r);

struct CheckFailure {
    MultiIndex n;
    int i = 0;
    int j = 0;
    int l = -1;
    std::string detail;
};

struct CheckReport {
    std::string name;
    std::size_t checked = 0;
    std::vector<CheckFailure> failures;

    bool pass() const { return failures.empty(); }
};

struct OrthogonalityItem {
    int j = 0;
    int l = 0;
    ScaledScalar value;
    bool pass = false;
};

struct OrthogonalityReport {
    MultiIndex n;
    std::vector<OrthogonalityItem> items;

    bool pass() const;
};

// For each direction j and l = 0..n_j-1, tests that the functional of
// C_n * k^l has an exactly zero mantissa.
OrthogonalityReport check_orthogonality(const MultiIndex& n, const CharlierTable& table);

// C_{n+e_i} - C_{n+e_j} + (sigma_i - sigma_j) C_n = 0 for all pairs.
CheckReport check_compatibility(const CharlierTable& table);

// k C_n(k-1) = C_{n+e_j}(k) + sigma_j C_n(k).
CheckReport check_backward(const CharlierTable& table);

// C_n(k+1) = C_n(k) + sum_j n_j C_{n-e_j}(k).
CheckReport check_forward(const CharlierTable& table);

// k C_n(k-1) = (k - |n|) C_n(k) - sum_i n_i sigma_i C_{n-e_i}(k), the
// relation left after eliminating the upper neighbor between the
// recurrence and the backward step.
CheckReport check_combined_difference(const CharlierTable& table);

struct RijReport {
    CheckReport corrected;       // the relation with sums over s of n_s C_{n+e_i-e_s}
    CheckReport printed_variant; // the relation with the transposed index placement
};

// Coefficient-level consequence of the symmetry operators annihilating
// the eigenstates; checks both the corrected relation and the variant as
// printed, i != j.
RijReport check_rij_polynomial(const CharlierTable& table, int i, int j);

} // namespace mcharlier
