#include "mcharlier/params.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mcharlier {

MultiIndex MultiIndex::unit(int r, int j) {
    MultiIndex n = zero(r);
    n.entries[static_cast<std::size_t>(j - 1)] = 1;
    return n;
}

int MultiIndex::total() const {
    return std::accumulate(entries.begin(), entries.end(), 0);
}

MultiIndex MultiIndex::plus(int j) const {
    MultiIndex n = *this;
    n.entries[static_cast<std::size_t>(j - 1)] += 1;
    return n;
}

MultiIndex MultiIndex::minus(int j) const {
    MultiIndex n = *this;
    int& v = n.entries[static_cast<std::size_t>(j - 1)];
    if (v == 0) throw std::out_of_range("MultiIndex::minus below zero");
    v -= 1;
    return n;
}

bool MultiIndex::operator<(const MultiIndex& other) const {
    const int ta = total();
    const int tb = other.total();
    if (ta != tb) return ta < tb;
    return entries < other.entries;
}

std::string MultiIndex::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out << ",";
        out << entries[i];
    }
    out << ")";
    return out.str();
}

namespace {
void enumerate(int r, int total, std::vector<int>& prefix, std::vector<MultiIndex>& out) {
    if (static_cast<int>(prefix.size()) == r - 1) {
        prefix.push_back(total);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        prefix.push_back(v);
        enumerate(r, total - v, prefix, out);
        prefix.pop_back();
    }
}
} // namespace

std::vector<MultiIndex> indices_with_total(int r, int total) {
    std::vector<MultiIndex> out;
    std::vector<int> prefix;
    enumerate(r, total, prefix, out);
    return out;
}

std::vector<MultiIndex> indices_up_to(int r, int max_total) {
    std::vector<MultiIndex> out;
    for (int t = 0; t <= max_total; ++t) {
        auto shell = indices_with_total(r, t);
        out.insert(out.end(), shell.begin(), shell.end());
    }
    return out;
}

CharlierParams::CharlierParams(int r_, std::vector<Rational> sigma_)
    : r(r_), sigma(std::move(sigma_)) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    if (static_cast<int>(sigma.size()) != r)
        throw std::invalid_argument("sigma must have r entries");
    for (const auto& s : sigma) {
        if (s <= 0) throw std::invalid_argument("sigma entries must be positive");
    }
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        for (std::size_t j = i + 1; j < sigma.size(); ++j) {
            if (sigma[i] == sigma[j])
                throw std::invalid_argument("sigma entries must be pairwise distinct");
        }
    }
}

} // namespace mcharlier
