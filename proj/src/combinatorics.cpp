// SPDX-License-Identifier: Apache-2.0
#include "exfeec/combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace exfeec {

IncreasingMap::IncreasingMap(int start, std::vector<int> values) : start_(start), values_(std::move(values)) {
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i] <= values_[i - 1]) throw std::invalid_argument("IncreasingMap: values not strictly increasing");
}

IncreasingMap IncreasingMap::from_mask(std::uint32_t mask, int start) {
    std::vector<int> v;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1u) v.push_back(i);
    return IncreasingMap(start, std::move(v));
}

IncreasingMap IncreasingMap::interval(int a, int b) { return IncreasingMap(a, interval_set(a, b)); }

int IncreasingMap::operator()(int i) const {
    if (i < start_ || i > end()) throw std::out_of_range("IncreasingMap: index " + std::to_string(i) + " outside domain");
    return values_[static_cast<std::size_t>(i - start_)];
}

bool IncreasingMap::contains_value(int v) const { return std::binary_search(values_.begin(), values_.end(), v); }

int IncreasingMap::position_of(int v) const {
    auto it = std::lower_bound(values_.begin(), values_.end(), v);
    if (it == values_.end() || *it != v) return -1;
    return static_cast<int>(it - values_.begin());
}

std::uint32_t IncreasingMap::mask() const {
    std::uint32_t m = 0;
    for (int v : values_) {
        if (v < 0 || v >= 32) throw std::out_of_range("IncreasingMap: value outside mask range");
        m |= 1u << v;
    }
    return m;
}

std::string IncreasingMap::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < values_.size(); ++i) s += (i ? "," : "") + std::to_string(values_[i]);
    return s + ")";
}

IntSet interval_set(int a, int b) {
    IntSet s;
    for (int i = a; i <= b; ++i) s.push_back(i);
    return s;
}

std::vector<IncreasingMap> enumerate_sigma(int a, int b, const IntSet& S) {
    const int k = b - a + 1;
    std::vector<IncreasingMap> out;
    if (k <= 0) {
        out.emplace_back(a, std::vector<int>{});
        return out;
    }
    const int m = static_cast<int>(S.size());
    if (k > m) return out;
    std::vector<int> pos(static_cast<std::size_t>(k));
    std::iota(pos.begin(), pos.end(), 0);
    while (true) {
        std::vector<int> vals;
        for (int p : pos) vals.push_back(S[static_cast<std::size_t>(p)]);
        out.emplace_back(a, std::move(vals));
        int i = k - 1;
        while (i >= 0 && pos[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++pos[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

IncreasingMap complement(const IncreasingMap& sigma, const IntSet& S) {
    for (int v : sigma.values())
        if (!std::binary_search(S.begin(), S.end(), v))
            throw std::invalid_argument("complement: range of " + sigma.str() + " not contained in S");
    std::vector<int> rest;
    for (int v : S)
        if (!sigma.contains_value(v)) rest.push_back(v);
    return IncreasingMap(sigma.start() + sigma.size(), std::move(rest));
}

int permutation_sign(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return (inv % 2) ? -1 : 1;
}

int sign(const IncreasingMap& sigma, const IntSet& S) {
    auto star = complement(sigma, S);
    std::vector<int> perm = sigma.values();
    perm.insert(perm.end(), star.values().begin(), star.values().end());
    return permutation_sign(perm);
}

IncreasingMap remove(const IncreasingMap& rho, int i) {
    if (rho.empty() || i < rho.start() || i > rho.end())
        throw std::out_of_range("remove: index " + std::to_string(i) + " outside domain of " + rho.str());
    std::vector<int> v = rho.values();
    v.erase(v.begin() + (i - rho.start()));
    return IncreasingMap(rho.start(), std::move(v));
}

IncreasingMap compose(const IncreasingMap& tau, const IncreasingMap& rho_hat) {
    std::vector<int> v;
    for (int x : rho_hat.values()) v.push_back(tau(x));
    return IncreasingMap(rho_hat.start(), std::move(v));
}

int merge_sign(std::uint32_t a, std::uint32_t b) {
    // count pairs (i in a, j in b) with i > j
    int inv = 0;
    for (std::uint32_t bb = b; bb; bb &= bb - 1) {
        int j = __builtin_ctz(bb);
        inv += popcount(a & ~((2u << j) - 1u));
    }
    return (inv % 2) ? -1 : 1;
}

int MultiIndex::order() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

std::string MultiIndex::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < exponents.size(); ++i) s += (i ? "," : "") + std::to_string(exponents[i]);
    return s + ")";
}

namespace {
void fill_multi(int i, int n, int rest, std::vector<int>& cur, std::vector<MultiIndex>& out) {
    if (i == n) {
        cur[static_cast<std::size_t>(n)] = rest;
        out.emplace_back(cur);
        return;
    }
    for (int e = rest; e >= 0; --e) {
        cur[static_cast<std::size_t>(i)] = e;
        fill_multi(i + 1, n, rest - e, cur, out);
    }
}
}  // namespace

std::vector<MultiIndex> enumerate_multiindices(int n, int r) {
    if (r < 0) throw std::invalid_argument("enumerate_multiindices: negative degree");
    if (n < 0) throw std::invalid_argument("enumerate_multiindices: negative dimension");
    std::vector<MultiIndex> out;
    std::vector<int> cur(static_cast<std::size_t>(n + 1), 0);
    fill_multi(0, n, r, cur, out);
    return out;
}

long long binomial_ll(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

}  // namespace exfeec
