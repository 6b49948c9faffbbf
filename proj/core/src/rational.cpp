#include "mcharlier/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mcharlier {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

bool valid_integer(const std::string& s) {
    if (!s.empty() && s.front() == '-') return all_digits(s.substr(1));
    return all_digits(s);
}

} // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer(text))
            throw std::invalid_argument("not a rational: '" + text + "'");
        return Rational(Integer(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!valid_integer(num) || !all_digits(den))
        throw std::invalid_argument("not a rational: '" + text + "'");
    Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return Rational(Integer(num), d);
}

std::string to_string(const Rational& x) {
    return x.str();
}

Rational pochhammer(const Rational& a, unsigned m) {
    Rational result = 1;
    for (unsigned t = 0; t < m; ++t) result *= a + t;
    return result;
}

Rational factorial(unsigned n) {
    Rational result = 1;
    for (unsigned t = 2; t <= n; ++t) result *= t;
    return result;
}

Rational pow_int(const Rational& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("zero to a negative power");
        return 1 / pow_int(base, -exp);
    }
    Rational result = 1;
    Rational b = base;
    unsigned long e = static_cast<unsigned long>(exp);
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

ScaledScalar::ScaledScalar(Rational mantissa, std::vector<long> exponent_coeffs)
    : mantissa_(std::move(mantissa)), expo_(std::move(exponent_coeffs)) {}

ScaledScalar ScaledScalar::zero(std::size_t r) {
    return ScaledScalar(Rational(0), std::vector<long>(r, 0));
}

ScaledScalar ScaledScalar::operator*(const ScaledScalar& other) const {
    if (expo_.size() != other.expo_.size())
        throw std::invalid_argument("ScaledScalar dimension mismatch");
    std::vector<long> e(expo_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.expo_[i];
    return ScaledScalar(mantissa_ * other.mantissa_, std::move(e));
}

ScaledScalar ScaledScalar::operator/(const ScaledScalar& other) const {
    if (expo_.size() != other.expo_.size())
        throw std::invalid_argument("ScaledScalar dimension mismatch");
    if (other.mantissa_ == 0) throw std::domain_error("ScaledScalar division by zero");
    std::vector<long> e(expo_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.expo_[i];
    return ScaledScalar(mantissa_ / other.mantissa_, std::move(e));
}

ScaledScalar ScaledScalar::scaled(const Rational& q) const {
    return ScaledScalar(mantissa_ * q, expo_);
}

bool ScaledScalar::operator==(const ScaledScalar& other) const {
    if (mantissa_ == 0 && other.mantissa_ == 0) return true;
    return mantissa_ == other.mantissa_ && expo_ == other.expo_;
}

std::string ScaledScalar::str() const {
    std::ostringstream out;
    out << mantissa_.str();
    for (std::size_t j = 0; j < expo_.size(); ++j) {
        if (expo_[j] != 0) out << "*e^(" << expo_[j] << "*s" << (j + 1) << ")";
    }
    return out.str();
}

} // namespace mcharlier
