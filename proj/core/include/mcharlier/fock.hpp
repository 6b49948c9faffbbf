#pragma once

#include "mcharlier/series.hpp"

#include <functional>
#include <string>
#include <vector>

namespace mcharlier {

// Linear operator on truncated series, built from the primitive actions
// d/dz_i, z_i*, multiply-by-series, scalar multiples, sums and
// compositions. raising_degree is the largest net total-degree increase
// any composition path can produce (clamped at zero).
struct FockOp {
    int r = 0;
    int raising_degree = 0;
    std::function<MSeries(const MSeries&)> action;

    MSeries operator()(const MSeries& f) const { return action(f); }
};

FockOp op_identity(int r);
FockOp op_diff(int r, int i);    // a_i = d/dz_i
FockOp op_mul_var(int r, int i); // a_i^+ = z_i
FockOp op_scalar(int r, const Rational& c);
FockOp op_mul_series(const MSeries& g, int raising_degree);
FockOp op_add(const FockOp& a, const FockOp& b);
FockOp op_sub(const FockOp& a, const FockOp& b);
FockOp op_scale(const FockOp& a, const Rational& c);
FockOp op_compose(const FockOp& outer, const FockOp& inner);
FockOp op_commutator(const FockOp& a, const FockOp& b);

// H_i = sum_j z_j d_j + sum_j sigma_j z_j + d_i + sigma_i.
FockOp make_hamiltonian(int i, const CharlierParams& params);
// H_0 = sum_j z_j d_j.
FockOp make_h0(int r);
// X_j = d_j + sigma_j.
FockOp make_ladder_x(int j, const CharlierParams& params);
// Y = z_1 + ... + z_r + 1.
FockOp make_ladder_y(int r);
// R_ij = (z_1 + ... + z_r + 1)(d_i + sigma_i - d_j - sigma_j).
FockOp make_symmetry_r(int i, int j, const CharlierParams& params);

// Similarity operator with irrational scalar prefactors dropped:
// exp_linear(-sigma, D) * f(.., z_i + 1, ..).
MSeries apply_S_projective(int i, const MSeries& f, const CharlierParams& params);

// (z_1 + ... + z_r)^k, the unnormalized symmetric eigenstate of H_0.
MSeries state_w(int k, int r, int cutoff);
// apply_S_projective(1, state_w(k)); coefficient of z^n is C_n(k)/(n!).
MSeries state_u(int k, const CharlierParams& params, int cutoff);

// Bargmann squared norm: sum_m coeff_m^2 * m_1! ... m_r!.
Rational bargmann_norm_sq(const MSeries& f);

struct InteriorFailure {
    MultiIndex exponent;
    Rational lhs;
    Rational rhs;
};

struct InteriorReport {
    std::string check;
    int cutoff = 0;
    int interior_degree = 0;
    std::size_t coefficients_checked = 0;
    std::vector<InteriorFailure> failures;

    bool pass() const { return failures.empty(); }
};

// [H_i, H_j] = d_i - d_j + (sigma_i - sigma_j) on basis monomials, plus
// on-shell annihilation of that commutator on the states u_k.
InteriorReport check_commutator_HH(int i, int j, const CharlierParams& params, int cutoff);

// H_i u_k = k u_k on coefficients of degree <= cutoff - 1.
InteriorReport check_eigen(int i, int k, const CharlierParams& params, int cutoff);

// H_i S_i f = S_i H_0 f for basis monomials f.
InteriorReport check_similarity(int i, const CharlierParams& params, int cutoff);

// (d_j + sigma_j) u_k = k u_{k-1}.
InteriorReport check_ladder_X(int j, int k, const CharlierParams& params, int cutoff);

// (z_1 + ... + z_r + 1) u_k = u_{k+1}.
InteriorReport check_ladder_Y(int k, const CharlierParams& params, int cutoff);

// (a) R_ij u_k = 0 for each k; (b) [H_m, R_ij] = 0 on basis monomials;
// (c) [R_ij, R_kl] = 0 on basis monomials for all pairs of symmetries.
InteriorReport check_R(int i, int j, const std::vector<int>& k_list,
                       const CharlierParams& params, int cutoff);

// phi_{n,k} = k! [z^k](e^{-sigma z}(1+z)^n), the rationalization of the
// similarity matrix element. Verifies phi_{n,k} = (-sigma)^{k-n} p_n(k)
// against the monic Charlier polynomial and the rationalized three-term
// recurrence before returning; throws std::logic_error on mismatch.
Rational psi_rationalized(int n, int k, const Rational& sigma1, int cutoff);

} // namespace mcharlier
