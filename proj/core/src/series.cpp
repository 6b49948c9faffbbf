#include "mcharlier/series.hpp"

#include <stdexcept>

namespace mcharlier {

namespace {
const Rational kZero = 0;
}

MSeries::MSeries(int r, int cutoff) : r_(r), cutoff_(cutoff) {
    if (r < 1) throw std::invalid_argument("MSeries: r must be >= 1");
    if (cutoff < 0) throw std::invalid_argument("MSeries: cutoff must be >= 0");
}

MSeries MSeries::constant(int r, int cutoff, const Rational& c) {
    MSeries f(r, cutoff);
    f.set_coeff(MultiIndex::zero(r), c);
    return f;
}

MSeries MSeries::variable(int r, int cutoff, int i) {
    MSeries f(r, cutoff);
    f.set_coeff(MultiIndex::unit(r, i), Rational(1));
    return f;
}

const Rational& MSeries::coeff(const MultiIndex& m) const {
    if (m.total() > cutoff_)
        throw std::out_of_range("MSeries::coeff beyond cutoff at " + m.str());
    auto it = terms_.find(m);
    return it == terms_.end() ? kZero : it->second;
}

void MSeries::set_coeff(const MultiIndex& m, const Rational& c) {
    if (m.size() != r_) throw std::invalid_argument("MSeries::set_coeff rank mismatch");
    if (m.total() > cutoff_) return;
    if (c == 0) terms_.erase(m);
    else terms_[m] = c;
}

MSeries MSeries::operator+(const MSeries& other) const {
    if (r_ != other.r_) throw std::invalid_argument("MSeries rank mismatch");
    MSeries out(r_, std::min(cutoff_, other.cutoff_));
    for (const auto& [m, c] : terms_) out.set_coeff(m, c);
    for (const auto& [m, c] : other.terms_) out.set_coeff(m, out.coeff(m) + c);
    return out;
}

MSeries MSeries::operator-(const MSeries& other) const {
    return *this + other * Rational(-1);
}

MSeries MSeries::operator*(const MSeries& other) const {
    if (r_ != other.r_) throw std::invalid_argument("MSeries rank mismatch");
    MSeries out(r_, std::min(cutoff_, other.cutoff_));
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            if (ma.total() + mb.total() > out.cutoff_) continue;
            MultiIndex m = ma;
            for (int i = 0; i < r_; ++i)
                m.entries[static_cast<std::size_t>(i)] += mb[i];
            out.set_coeff(m, out.coeff(m) + ca * cb);
        }
    }
    return out;
}

MSeries MSeries::operator*(const Rational& s) const {
    MSeries out(r_, cutoff_);
    if (s == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_[m] = c * s;
    return out;
}

bool MSeries::operator==(const MSeries& other) const {
    return r_ == other.r_ && cutoff_ == other.cutoff_ && terms_ == other.terms_;
}

MSeries MSeries::differentiate(int i) const {
    MSeries out(r_, cutoff_);
    for (const auto& [m, c] : terms_) {
        const int p = m[i - 1];
        if (p == 0) continue;
        out.set_coeff(m.minus(i), c * p);
    }
    return out;
}

MSeries MSeries::mul_var(int i) const {
    MSeries out(r_, cutoff_);
    for (const auto& [m, c] : terms_) {
        if (m.total() + 1 > cutoff_) continue;
        out.set_coeff(m.plus(i), c);
    }
    return out;
}

MSeries MSeries::shift_var(int i) const {
    MSeries out(r_, cutoff_);
    for (const auto& [m, c] : terms_) {
        const int p = m[i - 1];
        // (z_i + 1)^p expanded binomially; total degree only decreases.
        Rational binom = 1;
        MultiIndex mt = m;
        for (int t = p; t >= 0; --t) {
            mt.entries[static_cast<std::size_t>(i - 1)] = t;
            out.set_coeff(mt, out.coeff(mt) + c * binom);
            if (t > 0) binom = binom * t / (p - t + 1);
        }
    }
    return out;
}

bool MSeries::vanishes_up_to(int max_degree) const {
    for (const auto& [m, c] : terms_) {
        if (m.total() <= max_degree && c != 0) return false;
    }
    return true;
}

MSeries exp_linear(const std::vector<Rational>& c, int cutoff) {
    const int r = static_cast<int>(c.size());
    MSeries out(r, cutoff);
    for (const auto& m : indices_up_to(r, cutoff)) {
        Rational v = 1;
        for (int i = 0; i < r; ++i) {
            v *= pow_int(c[static_cast<std::size_t>(i)], m[i]);
            v /= factorial(static_cast<unsigned>(m[i]));
        }
        out.set_coeff(m, v);
    }
    return out;
}

MSeries gen_lhs(int k, const CharlierParams& params, int cutoff) {
    std::vector<Rational> neg_sigma;
    neg_sigma.reserve(params.sigma.size());
    for (const auto& s : params.sigma) neg_sigma.push_back(-s);

    MSeries base = MSeries::constant(params.r, cutoff, Rational(1));
    for (int i = 1; i <= params.r; ++i)
        base = base + MSeries::variable(params.r, cutoff, i);
    MSeries power = MSeries::constant(params.r, cutoff, Rational(1));
    for (int t = 0; t < k; ++t) power = power * base;

    return exp_linear(neg_sigma, cutoff) * power;
}

} // namespace mcharlier
