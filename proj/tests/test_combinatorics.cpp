#include "exfeec/combinatorics.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace exfeec;

TEST_SUITE("combinatorics") {
    TEST_CASE("increasing maps are counted by binomials") {
        for (int n = 0; n <= 6; ++n)
            for (int k = 0; k <= n + 1; ++k)
                CHECK(static_cast<long long>(enumerate_sigma(1, k, interval_set(0, n)).size()) == oracle::choose(n + 1, k));
        auto all = enumerate_sigma(0, 1, interval_set(0, 3));
        REQUIRE(all.size() == 6);
        CHECK(all.front().values() == std::vector<int>{0, 1});
        CHECK(all.back().values() == std::vector<int>{2, 3});
    }

    TEST_CASE("complement and sign") {
        IncreasingMap s{1, 3};
        auto S = interval_set(0, 3);
        CHECK(complement(s, S).values() == std::vector<int>{0, 2});
        // permutation (1,3,0,2)
        CHECK(sign(s, S) == oracle::inversion_sign({1, 3, 0, 2}));
    }

    TEST_CASE("merge sign matches inversion count") {
        for (std::uint32_t a = 0; a < 32; ++a)
            for (std::uint32_t b = 0; b < 32; ++b) {
                if (a & b) continue;
                std::vector<int> seq;
                for (int i = 0; i < 5; ++i)
                    if (a & (1u << i)) seq.push_back(i);
                for (int i = 0; i < 5; ++i)
                    if (b & (1u << i)) seq.push_back(i);
                CHECK(merge_sign(a, b) == oracle::inversion_sign(seq));
            }
    }

    TEST_CASE("permutation sign") {
        CHECK(permutation_sign({0, 1, 2}) == 1);
        CHECK(permutation_sign({1, 0, 2}) == -1);
        CHECK(permutation_sign({2, 0, 1}) == 1);
        CHECK(permutation_sign({3, 2, 1, 0}) == oracle::inversion_sign({3, 2, 1, 0}));
    }

    TEST_CASE("multi-indices") {
        for (int n = 0; n <= 3; ++n)
            for (int r = 0; r <= 4; ++r) {
                auto all = enumerate_multiindices(n, r);
                CHECK(static_cast<long long>(all.size()) == oracle::choose(n + r, r));
                for (const auto& a : all) CHECK(a.order() == r);
            }
    }

    TEST_CASE("remove and compose") {
        IncreasingMap rho{0, 2, 3};
        CHECK(remove(rho, 1).values() == std::vector<int>{0, 3});
        CHECK_THROWS(IncreasingMap{2, 1});
    }
}
