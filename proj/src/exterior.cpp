// SPDX-License-Identifier: Apache-2.0
#include "exfeec/exterior.hpp"

#include <map>
#include <mutex>
#include <unordered_map>

namespace exfeec::detail {

namespace {
struct MaskTable {
    std::vector<std::uint32_t> masks;
    std::unordered_map<std::uint32_t, int> rank;
};

const MaskTable& table(int n, int k) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, MaskTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
    MaskTable t;
    for (const auto& rho : enumerate_sigma(1, k, interval_set(1, n))) {
        t.rank[rho.mask()] = static_cast<int>(t.masks.size());
        t.masks.push_back(rho.mask());
    }
    return cache.emplace(std::make_pair(n, k), std::move(t)).first->second;
}
}  // namespace

const std::vector<std::uint32_t>& coordinate_masks(int n, int k) { return table(n, k).masks; }

int coordinate_rank(int n, int k, std::uint32_t mask) {
    const auto& t = table(n, k);
    auto it = t.rank.find(mask);
    if (it == t.rank.end()) throw std::out_of_range("AltForm: coordinate form outside Alt^" + std::to_string(k));
    return it->second;
}

}  // namespace exfeec::detail
