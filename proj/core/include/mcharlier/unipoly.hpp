#pragma once

#include "mcharlier/rational.hpp"

#include <vector>

namespace mcharlier {

// Dense univariate polynomial in the spectral variable k over exact
// rationals. The zero polynomial has an empty coefficient vector and
// degree -1; otherwise the last stored coefficient is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly constant(const Rational& c);
    static UniPoly variable(); // k

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    // Coefficient of k^i, zero beyond the stored degree.
    const Rational& coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    UniPoly operator+(const UniPoly& other) const;
    UniPoly operator-(const UniPoly& other) const;
    UniPoly operator*(const UniPoly& other) const;
    UniPoly operator*(const Rational& s) const;
    UniPoly operator-() const;
    bool operator==(const UniPoly& other) const { return coeffs_ == other.coeffs_; }

    Rational eval(const Rational& at) const;

    // q(k) = p(k + s), exact.
    UniPoly shift(long s) const;

    // Coefficients c_m with p(k) = sum_m c_m * k(k-1)...(k-m+1).
    std::vector<Rational> to_falling_factorial() const;
    static UniPoly from_falling_factorial(const std::vector<Rational>& c);

    std::string str() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

} // namespace mcharlier
