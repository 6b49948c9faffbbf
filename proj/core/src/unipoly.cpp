#include "mcharlier/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace mcharlier {

namespace {
const Rational kZero = 0;
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) {
    return UniPoly({c});
}

UniPoly UniPoly::variable() {
    return UniPoly({Rational(0), Rational(1)});
}

const Rational& UniPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

UniPoly UniPoly::operator+(const UniPoly& other) const {
    std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + other.coeff(i);
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& other) const {
    std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - other.coeff(i);
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const UniPoly& other) const {
    if (is_zero() || other.is_zero()) return UniPoly();
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const Rational& s) const {
    std::vector<Rational> out(coeffs_);
    for (auto& c : out) c *= s;
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
    return *this * Rational(-1);
}

Rational UniPoly::eval(const Rational& at) const {
    Rational result = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        result = result * at + *it;
    }
    return result;
}

UniPoly UniPoly::shift(long s) const {
    // Horner in (k + s).
    const UniPoly lin({Rational(s), Rational(1)});
    UniPoly result;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        result = result * lin + UniPoly::constant(*it);
    }
    return result;
}

std::vector<Rational> UniPoly::to_falling_factorial() const {
    // c_m = (forward difference)^m p (0) / m!.
    std::vector<Rational> out;
    UniPoly q = *this;
    Rational mfact = 1;
    for (int m = 0; !q.is_zero(); ++m) {
        if (m > 0) mfact *= m;
        out.push_back(q.eval(0) / mfact);
        q = q.shift(1) - q;
    }
    if (out.empty()) out.push_back(Rational(0));
    return out;
}

UniPoly UniPoly::from_falling_factorial(const std::vector<Rational>& c) {
    UniPoly result;
    UniPoly falling = UniPoly::constant(1);
    for (std::size_t m = 0; m < c.size(); ++m) {
        if (m > 0) falling = falling * UniPoly({Rational(-(long)(m - 1)), Rational(1)});
        result = result + falling * c[m];
    }
    return result;
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        first = false;
        Rational a = abs(c);
        if (a != 1 || i == 0) out << a.str();
        if (i > 0) {
            if (a != 1) out << "*";
            out << "k";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

} // namespace mcharlier
