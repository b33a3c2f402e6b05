#include "exfeec/polyform.hpp"
#include "exfeec/spaces.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace exfeec;

TEST_SUITE("polyform") {
    TEST_CASE("integration matches iterated integrals on the reference simplex") {
        for (int n = 1; n <= 3; ++n) {
            const auto T = IncreasingMap::interval(0, n);
            for (int deg = 0; deg <= 6; ++deg)
                for (const auto& a : enumerate_multiindices(n, deg)) {
                    std::vector<int> alpha(a.exponents.begin(), a.exponents.end());
                    PolyForm w = wedge(PolyForm::monomial(T, MultiIndex(alpha)), PolyForm::dlambda(T, IncreasingMap::interval(1, n)));
                    CHECK(integrate(w) == oracle::simplex_integral(alpha));
                }
        }
    }

    TEST_CASE("sum of the barycentric differentials vanishes") {
        const auto T = IncreasingMap::interval(0, 3);
        PolyForm s(T, 1);
        for (int i = 0; i <= 3; ++i) s += PolyForm::dlambda(T, i);
        CHECK(s.is_zero());
        PolyForm one(T, 0);
        for (int i = 0; i <= 3; ++i) one += PolyForm::lambda(T, i);
        CHECK(one == PolyForm::constant(T, 1));
    }

    TEST_CASE("exterior derivative squares to zero") {
        for (int n = 1; n <= 3; ++n) {
            const auto T = IncreasingMap::interval(0, n);
            for (int k = 0; k + 2 <= n; ++k)
                for (const auto& w : space_full(T, 2, k).basis()) CHECK(d(d(w)).is_zero());
        }
    }

    TEST_CASE("Whitney forms") {
        const auto T = IncreasingMap::interval(0, 2);
        PolyForm phi = whitney(T, IncreasingMap{1, 2});
        CHECK(phi == wedge(PolyForm::lambda(T, 1), PolyForm::dlambda(T, 2)) - wedge(PolyForm::lambda(T, 2), PolyForm::dlambda(T, 1)));
        CHECK(d(phi) == Rational(2) * PolyForm::dlambda(T, IncreasingMap{1, 2}));
        CHECK(trace(phi, IncreasingMap{0, 1}).is_zero());
        CHECK_FALSE(trace(phi, IncreasingMap{1, 2}).is_zero());
        // the edge integral of φ_ρ over its own edge is 1
        CHECK(integrate(trace(phi, IncreasingMap{1, 2})) == Rational(1));
    }

    TEST_CASE("traces use the face's own barycentrics") {
        const auto T = IncreasingMap::interval(0, 2);
        PolyForm f = PolyForm::monomial(T, {1, 1, 0});
        PolyForm t = trace(f, IncreasingMap{0, 1});
        CHECK(t == PolyForm::monomial(IncreasingMap{0, 1}, {1, 1}));
        CHECK(trace(f, IncreasingMap{1, 2}).is_zero());
        CHECK(trace(PolyForm::dlambda(T, 0), IncreasingMap{1, 2}).is_zero());
    }

    TEST_CASE("canonical text uses global labels") {
        const IncreasingMap sigma{1, 2, 3};
        PolyForm w = PolyForm::monomial(sigma, {1, 1, 0}, IncreasingMap{2});
        CHECK(w.str().find("l1 l2") != std::string::npos);
        CHECK(w.str().find("dl3") != std::string::npos);
    }

    TEST_CASE("Koszul contraction lowers degree and kills closed forms of top degree pairs") {
        const auto T = IncreasingMap::interval(0, 2);
        std::vector<Rational> c{Rational(1, 3), Rational(1, 3), Rational(1, 3)};
        for (const auto& w : space_full(T, 1, 2).basis()) CHECK(koszul(koszul(w, c), c).is_zero());
        CHECK(koszul(PolyForm::dlambda(T, 1), c) == PolyForm::lambda(T, 1) - PolyForm::constant(T, Rational(1, 3)));
    }

    TEST_CASE("evaluation at a vertex") {
        const auto T = IncreasingMap::interval(0, 2);
        PolyForm f = PolyForm::monomial(T, {0, 2, 0}) + PolyForm::constant(T, 3);
        CHECK(evaluate_scalar(f, {Rational(0), Rational(1), Rational(0)}) == Rational(4));
        CHECK(evaluate_scalar(f, {Rational(1, 2), Rational(1, 2), Rational(0)}) == Rational(13, 4));
    }
}

TEST_SUITE("spaces") {
    TEST_CASE("dimensions of full and trimmed spaces") {
        for (int n = 1; n <= 3; ++n) {
            const auto T = IncreasingMap::interval(0, n);
            for (int k = 0; k <= n; ++k)
                for (int r = 0; r <= 3; ++r) {
                    CHECK(static_cast<long long>(space_full(T, r, k).dimension()) == oracle::dim_full(n, r, k));
                    if (r >= 1)
                        CHECK(static_cast<long long>(space_trimmed(T, r, k).dimension()) == oracle::dim_trimmed(n, r, k));
                }
        }
    }

    TEST_CASE("trace-free dimensions follow the trimmed counts") {
        for (int n = 1; n <= 3; ++n) {
            const auto T = IncreasingMap::interval(0, n);
            for (int j = 0; j <= n; ++j)
                for (int s = 0; s <= 3; ++s) {
                    // P̊_sΛ^j(T) ≅ P⁻_{s-n+j}Λ^{n-j}(T)
                    long long want = oracle::dim_trimmed(n, s - n + j, n - j);
                    CHECK(static_cast<long long>(trace_free_subspace(space_full(T, s, j)).dimension()) == want);
                }
        }
    }

    TEST_CASE("nesting of the families") {
        const auto T = IncreasingMap::interval(0, 2);
        for (int k = 0; k <= 2; ++k)
            for (int r = 1; r <= 3; ++r) {
                CHECK(span_subset(space_full(T, r - 1, k), space_trimmed(T, r, k)));
                CHECK(span_subset(space_trimmed(T, r, k), space_full(T, r, k)));
            }
    }
}
