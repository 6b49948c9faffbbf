#pragma once

#include "mcharlier/params.hpp"

#include <map>

namespace mcharlier {

// Multivariate power series in z_1..z_r over exact rationals, truncated
// at a total degree cutoff. Absent exponents mean zero; no stored
// exponent exceeds the cutoff.
class MSeries {
public:
    MSeries(int r, int cutoff);

    static MSeries constant(int r, int cutoff, const Rational& c);
    static MSeries variable(int r, int cutoff, int i); // z_i, 1-based

    int r() const { return r_; }
    int cutoff() const { return cutoff_; }
    const std::map<MultiIndex, Rational>& terms() const { return terms_; }

    // Stored coefficient or zero; |m| > cutoff is rejected so that a
    // truncated-away coefficient is never read as zero.
    const Rational& coeff(const MultiIndex& m) const;
    void set_coeff(const MultiIndex& m, const Rational& c);

    MSeries operator+(const MSeries& other) const;
    MSeries operator-(const MSeries& other) const;
    MSeries operator*(const MSeries& other) const; // truncated convolution
    MSeries operator*(const Rational& s) const;
    bool operator==(const MSeries& other) const;

    // d/dz_i and multiplication by z_i (terms pushed past the cutoff are
    // dropped).
    MSeries differentiate(int i) const;
    MSeries mul_var(int i) const;

    // Substitutes z_i -> z_i + 1; exact for the stored truncation since
    // total degree does not increase.
    MSeries shift_var(int i) const;

    // True when every coefficient of total degree <= max_degree is zero.
    bool vanishes_up_to(int max_degree) const;

private:
    int r_;
    int cutoff_;
    std::map<MultiIndex, Rational> terms_;
};

// Truncation of e^{sum_j c_j z_j}: coefficient of z^m is prod c_j^{m_j}/m_j!.
MSeries exp_linear(const std::vector<Rational>& c, int cutoff);

// exp_linear(-sigma, D) * (1 + z_1 + ... + z_r)^k. Its coefficient of z^n
// is C_n(k) / (n_1! ... n_r!).
MSeries gen_lhs(int k, const CharlierParams& params, int cutoff);

} // namespace mcharlier
