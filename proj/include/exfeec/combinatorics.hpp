// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace exfeec {

// Strictly increasing map from the interval [start .. start+size()-1] into the
// integers. The empty map has any start.
class IncreasingMap {
public:
    IncreasingMap() = default;
    IncreasingMap(int start, std::vector<int> values);
    IncreasingMap(std::initializer_list<int> values) : IncreasingMap(0, std::vector<int>(values)) {}
    static IncreasingMap from_mask(std::uint32_t mask, int start = 0);
    static IncreasingMap interval(int a, int b) ;  // identity on [a..b]

    int start() const { return start_; }
    int end() const { return start_ + size() - 1; }
    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }
    const std::vector<int>& values() const& { return values_; }
    std::vector<int> values() && { return std::move(values_); }
    // σ(i) for i in [start..end]
    int operator()(int i) const;
    int at_position(int p) const { return values_.at(static_cast<std::size_t>(p)); }
    bool contains_value(int v) const;
    // position p (0-based) of value v, or -1
    int position_of(int v) const;
    std::uint32_t mask() const;
    bool range_subset_of(const IncreasingMap& o) const { return (mask() & ~o.mask()) == 0; }

    IncreasingMap with_start(int s) const { return IncreasingMap(s, values_); }

    std::string str() const;

    friend bool operator==(const IncreasingMap& a, const IncreasingMap& b) {
        return a.values_ == b.values_ && (a.values_.empty() || a.start_ == b.start_);
    }
    friend bool operator<(const IncreasingMap& a, const IncreasingMap& b) {
        if (a.values_ != b.values_) return a.values_ < b.values_;
        return !a.values_.empty() && a.start_ < b.start_;
    }
    friend std::ostream& operator<<(std::ostream& os, const IncreasingMap& m) { return os << m.str(); }

private:
    int start_ = 0;
    std::vector<int> values_;
};

using IntSet = std::vector<int>;  // sorted, distinct

IntSet interval_set(int a, int b);

// All increasing maps [a..b] -> S, in lexicographic order of values.
std::vector<IncreasingMap> enumerate_sigma(int a, int b, const IntSet& S);

// σ* with range S \ range(σ); its domain continues after σ's.
IncreasingMap complement(const IncreasingMap& sigma, const IntSet& S);

// Parity of the permutation (σ, σ*) of S.
int sign(const IncreasingMap& sigma, const IntSet& S);

// σ with the value at domain index i deleted.
IncreasingMap remove(const IncreasingMap& rho, int i);

// (τ∘ρ̂)(i) = τ(ρ̂(i)); ρ̂ must map into τ's domain.
IncreasingMap compose(const IncreasingMap& tau, const IncreasingMap& rho_hat);

// Parity of the permutation sorting the given distinct integers.
int permutation_sign(const std::vector<int>& p);

// Sign ε with (dλ)_a ∧ (dλ)_b = ε (dλ)_{a ∪ b} for disjoint bitmasks.
int merge_sign(std::uint32_t a, std::uint32_t b);

inline int popcount(std::uint32_t m) { return __builtin_popcount(m); }

struct MultiIndex {
    std::vector<int> exponents;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> e) : exponents(std::move(e)) {}
    MultiIndex(std::initializer_list<int> e) : exponents(e) {}
    int order() const;  // |α|
    int size() const { return static_cast<int>(exponents.size()); }
    int operator[](int i) const { return exponents.at(static_cast<std::size_t>(i)); }
    std::string str() const;
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) { return a.exponents < b.exponents; }
};

// All α over [0..n] with |α| = r, lexicographically descending.
std::vector<MultiIndex> enumerate_multiindices(int n, int r);

long long binomial_ll(int n, int k);

}  // namespace exfeec
