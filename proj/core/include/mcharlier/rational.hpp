#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace mcharlier {

using Integer = boost::multiprecision::cpp_int;

// Exact rational number. boost keeps the value canonical: lowest terms,
// positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// Parses "p" or "p/q" with decimal integers and an optional leading minus.
// Decimals and anything else are rejected with std::invalid_argument.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& x);

// Rising factorial (a)_m = a(a+1)...(a+m-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned m);

Rational factorial(unsigned n);

// base^exp for integer exp; negative exp requires base != 0.
Rational pow_int(const Rational& base, long exp);

// Exact value of the form mantissa * e^{sum_j c_j * sigma_j}. The
// exponential factors stay symbolic so that zero tests reduce to an exact
// zero test of the mantissa.
class ScaledScalar {
public:
    ScaledScalar(Rational mantissa, std::vector<long> exponent_coeffs);

    static ScaledScalar zero(std::size_t r);

    const Rational& mantissa() const { return mantissa_; }
    const std::vector<long>& exponent_coeffs() const { return expo_; }

    bool is_zero() const { return mantissa_ == 0; }

    ScaledScalar operator*(const ScaledScalar& other) const;
    ScaledScalar operator/(const ScaledScalar& other) const;
    ScaledScalar scaled(const Rational& q) const;

    // Two zeros are equal regardless of exponent vectors.
    bool operator==(const ScaledScalar& other) const;
    bool operator!=(const ScaledScalar& other) const { return !(*this == other); }

    std::string str() const;

private:
    Rational mantissa_;
    std::vector<long> expo_;
};

} // namespace mcharlier
