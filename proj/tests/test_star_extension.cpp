#include "exfeec/extension.hpp"
#include "exfeec/json_io.hpp"
#include "exfeec/star.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace exfeec;

TEST_SUITE("star_ops") {
    TEST_CASE("ring star multiplies by the complementary bubble") {
        const auto T = IncreasingMap::interval(0, 2);
        // a top form goes to a multiple of λ0λ1λ2
        PolyForm top = ring_star(PolyForm::dlambda(T, IncreasingMap{1, 2}));
        CHECK(top.k() == 0);
        CHECK(is_trace_free(top));
        CHECK(evaluate_scalar(top, {Rational(1, 3), Rational(1, 3), Rational(1, 3)}) != Rational(0));
        CHECK(evaluate_scalar(top, {Rational(0), Rational(1, 2), Rational(1, 2)}) == Rational(0));
    }

    TEST_CASE("ring star twice is a signed bubble multiple") {
        for (int n = 1; n <= 3; ++n) {
            const auto T = IncreasingMap::interval(0, n);
            PolyForm b = PolyForm::bubble(T, IncreasingMap::interval(0, n));
            for (int k = 0; k <= n; ++k)
                for (const auto& w : space_full(T, 1, k).basis())
                    CHECK(ring_star(ring_star(w)) == Rational((k * (n - k)) % 2 ? -1 : 1) * wedge(b, w));
        }
    }

    TEST_CASE("simplex star on the reference triangle") {
        StarContext ctx(Simplex::unit(2));
        for (int k = 0; k <= 2; ++k)
            for (auto m : detail::coordinate_masks(2, k)) {
                auto w = AltForm<QuadExt>::basis(2, IncreasingMap::from_mask(m, 1));
                CHECK(ctx.star(ctx.star(w)) == QuadExt((k * (2 - k)) % 2 ? -1 : 1) * w);
            }
    }

    TEST_CASE("Gram matrix of a trace-free basis is symmetric and positive") {
        auto D = dual_vandermonde(IncreasingMap::interval(0, 2), Family::Full, 3, 1);
        CHECK(D.square);
        CHECK(D.invertible);
        CHECK(D.gram_symmetric);
        CHECK(D.gram_positive);
        CHECK_FALSE(D.det.is_zero());
    }
}

TEST_SUITE("extension") {
    TEST_CASE("bubble decomposition of lambda0 phi12") {
        const auto T = IncreasingMap::interval(0, 2);
        PolyForm w = wedge(PolyForm::lambda(T, 0), whitney(T, IncreasingMap{1, 2}));
        auto W = bubble_decompose(w);
        // λ0φ12 = λ0λ1dλ2 - λ0λ2dλ1
        CHECK(W.components.at(IncreasingMap{0, 1}) == PolyForm::constant(IncreasingMap{0, 1}, 1));
        CHECK(W.components.at(IncreasingMap{0, 2}) == PolyForm::constant(IncreasingMap{0, 2}, -1));
        CHECK(W.components.at(IncreasingMap{0, 1, 2}).is_zero());
        CHECK(reassemble(W) == w);
    }

    TEST_CASE("bubble extension vanishes on faces missing its face") {
        const auto T = IncreasingMap::interval(0, 3);
        PolyForm e = bubble_extend(IncreasingMap{1, 2}, T, PolyForm::constant(IncreasingMap{1, 2}, 1));
        CHECK(e.k() == 2);
        CHECK(is_trace_free(e));
        CHECK(trace(e, IncreasingMap{0, 1, 3}).is_zero());
    }

    TEST_CASE("decompose rejects forms with traces") {
        const auto T = IncreasingMap::interval(0, 2);
        CHECK_THROWS_AS(bubble_decompose(PolyForm::dlambda(T, 1)), NotTraceFree);
    }

    TEST_CASE("unified extension restricts back") {
        const auto T = IncreasingMap::interval(0, 3);
        const IncreasingMap f{0, 2, 3};
        for (const auto& w : trace_free_subspace(space_full(f, 3, 1)).basis()) {
            PolyForm e = dot_extend(T, w);
            CHECK(trace(e, f) == w);
            CHECK(trace(e, IncreasingMap{0, 1, 2}).is_zero() == trace(w, IncreasingMap{0, 2}).is_zero());
        }
    }

    TEST_CASE("generator parsing") {
        const IncreasingMap sigma{1, 2, 3};
        PolyForm w = PolyForm::monomial(sigma, {1, 1, 0}, IncreasingMap{2});
        auto gens = full_generators(w, 2);
        CHECK(expand_full(sigma, 1, gens) == w);
        CHECK_THROWS_AS(full_generators(w, 1), GeneratorParseError);
        auto tg = trimmed_generators(w, 3);
        CHECK(expand_trimmed(sigma, 1, tg) == w);
        CHECK_THROWS_AS(trimmed_generators(w, 2), GeneratorParseError);
    }

    TEST_CASE("trimmed legacy extension leaves P2") {
        const IncreasingMap sigma{1, 2, 3}, T = IncreasingMap::interval(0, 3);
        std::vector<TrimmedGenerator> gens{{Rational(1), MultiIndex{1, 1, 0}, IncreasingMap{2, 3}},
                                           {Rational(1), MultiIndex{1, 1, 0}, IncreasingMap{1, 3}}};
        CHECK(trimmed_text(sigma, gens) == "l1 l2 (phi23 + phi13)");
        PolyForm e = legacy_extend_trimmed(sigma, T, 3, 1, gens);
        CHECK_FALSE(space_full(T, 2, 1).contains(e));
        CHECK(space_trimmed(T, 3, 1).contains(e));
        CHECK(trace(e, sigma) == PolyForm::monomial(sigma, {1, 1, 0}, IncreasingMap{2}));
    }

    TEST_CASE("geometric decomposition of cubic Lagrange elements") {
        auto G = geometric_decompose(IncreasingMap::interval(0, 2), 0, Family::Full, 3);
        CHECK(G.ok());
        CHECK(G.target_dim == 10);
        std::size_t vertices = 0, edges = 0, cells = 0;
        for (const auto& c : G.components) {
            if (c.sigma.size() == 1) vertices += c.local.dimension();
            if (c.sigma.size() == 2) edges += c.local.dimension();
            if (c.sigma.size() == 3) cells += c.local.dimension();
        }
        CHECK(vertices == 3);
        CHECK(edges == 6);
        CHECK(cells == 1);
    }

    TEST_CASE("json round trip of forms and rationals") {
        const IncreasingMap sigma{1, 2, 3};
        PolyForm w = PolyForm::monomial(sigma, {1, 1, 0}, IncreasingMap{2}, Rational(-2, 3));
        json j = to_json(w);
        CHECK(j["terms"][0]["coeff"] == "-2/3");
        CHECK(polyform_from_json(j) == w);
        CHECK(rational_from_json(json("5/10")) == Rational(1, 2));
        CHECK_THROWS(rational_from_json(json(0.5)));
    }
}
