#include "mcharlier/fock.hpp"

#include "mcharlier/charlier.hpp"

#include <stdexcept>

namespace mcharlier {

FockOp op_identity(int r) {
    return {r, 0, [](const MSeries& f) { return f; }};
}

FockOp op_diff(int r, int i) {
    return {r, 0, [i](const MSeries& f) { return f.differentiate(i); }};
}

FockOp op_mul_var(int r, int i) {
    return {r, 1, [i](const MSeries& f) { return f.mul_var(i); }};
}

FockOp op_scalar(int r, const Rational& c) {
    return {r, 0, [c](const MSeries& f) { return f * c; }};
}

FockOp op_mul_series(const MSeries& g, int raising_degree) {
    return {g.r(), raising_degree, [g](const MSeries& f) { return g * f; }};
}

FockOp op_add(const FockOp& a, const FockOp& b) {
    if (a.r != b.r) throw std::invalid_argument("FockOp rank mismatch");
    return {a.r, std::max(a.raising_degree, b.raising_degree),
            [a, b](const MSeries& f) { return a(f) + b(f); }};
}

FockOp op_sub(const FockOp& a, const FockOp& b) {
    return op_add(a, op_scale(b, Rational(-1)));
}

FockOp op_scale(const FockOp& a, const Rational& c) {
    return {a.r, a.raising_degree, [a, c](const MSeries& f) { return a(f) * c; }};
}

FockOp op_compose(const FockOp& outer, const FockOp& inner) {
    if (outer.r != inner.r) throw std::invalid_argument("FockOp rank mismatch");
    return {outer.r, outer.raising_degree + inner.raising_degree,
            [outer, inner](const MSeries& f) { return outer(inner(f)); }};
}

FockOp op_commutator(const FockOp& a, const FockOp& b) {
    return op_sub(op_compose(a, b), op_compose(b, a));
}

FockOp make_h0(int r) {
    FockOp h = op_compose(op_mul_var(r, 1), op_diff(r, 1));
    for (int j = 2; j <= r; ++j)
        h = op_add(h, op_compose(op_mul_var(r, j), op_diff(r, j)));
    // Number operators do not raise degree.
    h.raising_degree = 0;
    return h;
}

FockOp make_hamiltonian(int i, const CharlierParams& params) {
    const int r = params.r;
    if (i < 1 || i > r) throw std::invalid_argument("direction out of range");
    FockOp h = make_h0(r);
    for (int j = 1; j <= r; ++j)
        h = op_add(h, op_scale(op_mul_var(r, j), params.sigma_at(j)));
    h = op_add(h, op_diff(r, i));
    h = op_add(h, op_scalar(r, params.sigma_at(i)));
    return h;
}

FockOp make_ladder_x(int j, const CharlierParams& params) {
    return op_add(op_diff(params.r, j), op_scalar(params.r, params.sigma_at(j)));
}

FockOp make_ladder_y(int r) {
    FockOp y = op_scalar(r, Rational(1));
    for (int j = 1; j <= r; ++j) y = op_add(y, op_mul_var(r, j));
    return y;
}

FockOp make_symmetry_r(int i, int j, const CharlierParams& params) {
    FockOp inner = op_add(
        op_sub(op_diff(params.r, i), op_diff(params.r, j)),
        op_scalar(params.r, params.sigma_at(i) - params.sigma_at(j)));
    return op_compose(make_ladder_y(params.r), inner);
}

MSeries apply_S_projective(int i, const MSeries& f, const CharlierParams& params) {
    std::vector<Rational> neg_sigma;
    neg_sigma.reserve(params.sigma.size());
    for (const auto& s : params.sigma) neg_sigma.push_back(-s);
    return exp_linear(neg_sigma, f.cutoff()) * f.shift_var(i);
}

MSeries state_w(int k, int r, int cutoff) {
    if (k > cutoff) throw std::invalid_argument("state_w: k exceeds cutoff");
    MSeries sum(r, cutoff);
    for (int j = 1; j <= r; ++j) sum = sum + MSeries::variable(r, cutoff, j);
    MSeries out = MSeries::constant(r, cutoff, Rational(1));
    for (int t = 0; t < k; ++t) out = out * sum;
    return out;
}

MSeries state_u(int k, const CharlierParams& params, int cutoff) {
    return apply_S_projective(1, state_w(k, params.r, cutoff), params);
}

Rational bargmann_norm_sq(const MSeries& f) {
    Rational out = 0;
    for (const auto& [m, c] : f.terms()) {
        Rational w = c * c;
        for (int i = 0; i < f.r(); ++i) w *= factorial(static_cast<unsigned>(m[i]));
        out += w;
    }
    return out;
}

namespace {

// Collects nonzero coefficients of total degree <= interior_degree.
void collect_failures(const MSeries& residual, int interior_degree,
                      InteriorReport& report) {
    for (const auto& [m, c] : residual.terms()) {
        if (m.total() <= interior_degree && c != 0)
            report.failures.push_back({m, c, Rational(0)});
    }
    ++report.coefficients_checked;
}

// Applies op to every basis monomial of degree <= basis_degree and
// records nonzero interior coefficients of the output.
void check_on_basis(const FockOp& op, int cutoff, int basis_degree,
                    int interior_degree, InteriorReport& report) {
    for (const auto& m : indices_up_to(op.r, basis_degree)) {
        MSeries basis(op.r, cutoff);
        basis.set_coeff(m, Rational(1));
        collect_failures(op(basis), interior_degree, report);
    }
}

} // namespace

InteriorReport check_commutator_HH(int i, int j, const CharlierParams& params,
                                   int cutoff) {
    InteriorReport report{"commutator_HH", cutoff, cutoff - 2, 0, {}};
    const int r = params.r;
    const FockOp hi = make_hamiltonian(i, params);
    const FockOp hj = make_hamiltonian(j, params);
    const FockOp expected = op_add(
        op_sub(op_diff(r, i), op_diff(r, j)),
        op_scalar(r, params.sigma_at(i) - params.sigma_at(j)));
    const FockOp residual = op_sub(op_commutator(hi, hj), expected);
    check_on_basis(residual, cutoff, cutoff - 2, cutoff - 2, report);

    // On-shell annihilation: the commutator kills every eigenstate.
    const int kmax = std::min(5, cutoff - 1);
    for (int k = 0; k <= kmax; ++k) {
        collect_failures(expected(state_u(k, params, cutoff)), cutoff - 1, report);
    }
    return report;
}

InteriorReport check_eigen(int i, int k, const CharlierParams& params, int cutoff) {
    InteriorReport report{"eigen", cutoff, cutoff - 1, 0, {}};
    if (k > cutoff - 1) throw std::invalid_argument("check_eigen: k too large for cutoff");
    const MSeries u = state_u(k, params, cutoff);
    const MSeries residual = make_hamiltonian(i, params)(u) - u * Rational(k);
    collect_failures(residual, cutoff - 1, report);
    return report;
}

InteriorReport check_similarity(int i, const CharlierParams& params, int cutoff) {
    InteriorReport report{"similarity", cutoff, cutoff - 2, 0, {}};
    const FockOp hi = make_hamiltonian(i, params);
    const FockOp h0 = make_h0(params.r);
    for (const auto& m : indices_up_to(params.r, cutoff - 2)) {
        MSeries f(params.r, cutoff);
        f.set_coeff(m, Rational(1));
        const MSeries lhs = hi(apply_S_projective(i, f, params));
        const MSeries rhs = apply_S_projective(i, h0(f), params);
        collect_failures(lhs - rhs, cutoff - 2, report);
    }
    return report;
}

InteriorReport check_ladder_X(int j, int k, const CharlierParams& params, int cutoff) {
    InteriorReport report{"ladder_X", cutoff, cutoff - 1, 0, {}};
    if (k < 1 || k > cutoff) throw std::invalid_argument("check_ladder_X: need 1 <= k <= cutoff");
    const MSeries residual =
        make_ladder_x(j, params)(state_u(k, params, cutoff)) -
        state_u(k - 1, params, cutoff) * Rational(k);
    collect_failures(residual, cutoff - 1, report);
    return report;
}

InteriorReport check_ladder_Y(int k, const CharlierParams& params, int cutoff) {
    InteriorReport report{"ladder_Y", cutoff, cutoff - 1, 0, {}};
    if (k + 1 > cutoff) throw std::invalid_argument("check_ladder_Y: need k+1 <= cutoff");
    const MSeries residual =
        make_ladder_y(params.r)(state_u(k, params, cutoff)) -
        state_u(k + 1, params, cutoff);
    collect_failures(residual, cutoff - 1, report);
    return report;
}

InteriorReport check_R(int i, int j, const std::vector<int>& k_list,
                       const CharlierParams& params, int cutoff) {
    if (i == j) throw std::invalid_argument("check_R: i must differ from j");
    InteriorReport report{"symmetry_R", cutoff, cutoff - 2, 0, {}};
    const FockOp rij = make_symmetry_r(i, j, params);

    for (int k : k_list) {
        collect_failures(rij(state_u(k, params, cutoff)), cutoff - 2, report);
    }
    for (int m = 1; m <= params.r; ++m) {
        check_on_basis(op_commutator(make_hamiltonian(m, params), rij), cutoff,
                       cutoff - 3, cutoff - 3, report);
    }
    for (int a = 1; a <= params.r; ++a) {
        for (int b = a + 1; b <= params.r; ++b) {
            check_on_basis(op_commutator(rij, make_symmetry_r(a, b, params)), cutoff,
                           cutoff - 4, cutoff - 4, report);
        }
    }
    return report;
}

Rational psi_rationalized(int n, int k, const Rational& sigma1, int cutoff) {
    if (sigma1 == 0) throw std::invalid_argument("psi_rationalized: sigma1 must be nonzero");
    if (n > cutoff || k > cutoff)
        throw std::invalid_argument("psi_rationalized: indices exceed cutoff");

    const auto phi = [&](int m) -> Rational {
        MSeries onez = MSeries::constant(1, cutoff, Rational(1)) +
                       MSeries::variable(1, cutoff, 1);
        MSeries pw = MSeries::constant(1, cutoff, Rational(1));
        for (int t = 0; t < m; ++t) pw = pw * onez;
        const MSeries f = exp_linear({-sigma1}, cutoff) * pw;
        MultiIndex e(std::vector<int>{k});
        return f.coeff(e) * factorial(static_cast<unsigned>(k));
    };

    const Rational value = phi(n);

    // Rational form of the closed matrix element.
    const Rational expected =
        pow_int(-sigma1, k - n) * monic_charlier(n, sigma1).eval(Rational(k));
    if (value != expected)
        throw std::logic_error("psi_rationalized: closed form mismatch");

    // Rationalized three-term recurrence.
    const Rational prev = n > 0 ? phi(n - 1) : Rational(0);
    const Rational next = phi(n + 1);
    if (Rational(k) * value != (n + sigma1) * value - n * prev - sigma1 * next)
        throw std::logic_error("psi_rationalized: recurrence mismatch");

    return value;
}

} // namespace mcharlier
