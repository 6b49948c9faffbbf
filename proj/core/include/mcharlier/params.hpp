#pragma once

#include "mcharlier/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace mcharlier {

// r-tuple of naturals indexing a polynomial on the lattice N^r.
struct MultiIndex {
    std::vector<int> entries;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> e) : entries(std::move(e)) {}
    static MultiIndex zero(int r) { return MultiIndex(std::vector<int>(r, 0)); }
    static MultiIndex unit(int r, int j); // e_j, 1-based j

    int size() const { return static_cast<int>(entries.size()); }
    int total() const; // |n|
    int operator[](int j) const { return entries[static_cast<std::size_t>(j)]; }

    MultiIndex plus(int j) const;  // n + e_j, 1-based j
    MultiIndex minus(int j) const; // n - e_j; requires n_j > 0

    bool operator==(const MultiIndex& other) const { return entries == other.entries; }
    // Graded-lex: first by |n|, then lexicographically.
    bool operator<(const MultiIndex& other) const;

    std::string str() const;
};

// All multi-indices of length r with given total, in lex order.
std::vector<MultiIndex> indices_with_total(int r, int total);
// All multi-indices with total <= max_total, in graded-lex order.
std::vector<MultiIndex> indices_up_to(int r, int max_total);

struct CharlierParams {
    int r = 0;
    std::vector<Rational> sigma;

    // Throws std::invalid_argument unless r >= 1, sigma has r entries,
    // all positive and pairwise distinct.
    CharlierParams(int r_, std::vector<Rational> sigma_);

    const Rational& sigma_at(int j) const { return sigma[static_cast<std::size_t>(j - 1)]; }
};

} // namespace mcharlier
