#include "exfeec/exterior.hpp"
#include "exfeec/simplex.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace exfeec;

namespace {
AltForm<Rational> dx(int n, std::initializer_list<int> idx) { return AltForm<Rational>::basis(n, IncreasingMap(1, idx)); }
}  // namespace

TEST_SUITE("exterior_algebra") {
    TEST_CASE("wedge is graded commutative") {
        for (int n = 1; n <= 4; ++n)
            for (int p = 0; p <= n; ++p)
                for (int q = 0; p + q <= n; ++q)
                    for (auto a : detail::coordinate_masks(n, p))
                        for (auto b : detail::coordinate_masks(n, q)) {
                            auto wa = AltForm<Rational>::basis(n, IncreasingMap::from_mask(a, 1));
                            auto wb = AltForm<Rational>::basis(n, IncreasingMap::from_mask(b, 1));
                            CHECK(wedge(wa, wb) == Rational((p * q) % 2 ? -1 : 1) * wedge(wb, wa));
                        }
    }

    TEST_CASE("hodge star on coordinate forms") {
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k <= n; ++k)
                for (auto m : detail::coordinate_masks(n, k)) {
                    auto rho = IncreasingMap::from_mask(m, 1);
                    std::vector<int> perm = rho.values(), rest;
                    for (int i = 1; i <= n; ++i)
                        if (!rho.contains_value(i)) rest.push_back(i);
                    perm.insert(perm.end(), rest.begin(), rest.end());
                    auto expect = Rational(oracle::inversion_sign(perm)) * AltForm<Rational>::basis(n, IncreasingMap(1, rest));
                    CHECK(hodge(AltForm<Rational>::basis(n, rho)) == expect);
                }
        CHECK(hodge(dx(3, {1})) == dx(3, {2, 3}));
        CHECK(hodge(dx(3, {2})) == Rational(-1) * dx(3, {1, 3}));
    }

    TEST_CASE("evaluation is a determinant") {
        Matrix<Rational> V{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}, {Rational(0), Rational(1)}};
        CHECK(evaluate(dx(3, {1, 2}), V) == Rational(1 * 4 - 2 * 3));
        CHECK(evaluate(dx(3, {2, 3}), V) == Rational(3 * 1 - 4 * 0));
    }

    TEST_CASE("interior product is an antiderivation") {
        std::vector<Rational> v{Rational(1), Rational(-2), Rational(3)};
        auto a = dx(3, {1}), b = dx(3, {2, 3});
        auto lhs = interior(wedge(a, b), v);
        auto rhs = wedge(interior(a, v), b) - wedge(a, interior(b, v));
        CHECK(lhs == rhs);
    }

    TEST_CASE("pullback composes with the Jacobian determinant on top forms") {
        Matrix<Rational> J{{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
        CHECK(pullback(J, dx(2, {1, 2})) == Rational(5) * dx(2, {1, 2}));
    }
}

TEST_SUITE("simplex") {
    TEST_CASE("reference simplex volume and barycentrics") {
        for (int n = 1; n <= 4; ++n) {
            auto T = Simplex::unit(n);
            CHECK(T.volume() == Rational(1) / factorial(n));
            for (int i = 0; i <= n; ++i) {
                auto b = T.barycentric(T.vertex(i));
                for (int j = 0; j <= n; ++j) CHECK(b[static_cast<std::size_t>(j)] == Rational(i == j ? 1 : 0));
            }
            auto g = T.gradients();
            for (std::size_t c = 0; c < g.cols(); ++c) {
                Rational s(0);
                for (std::size_t r = 0; r < g.rows(); ++r) s += g(r, c);
                CHECK(s.is_zero());
            }
        }
    }

    TEST_CASE("barycentric round trip on a skewed triangle") {
        Simplex T({{Rational(0), Rational(0)}, {Rational(3), Rational(1)}, {Rational(1, 2), Rational(2)}});
        Point<Rational> x{Rational(1), Rational(1, 3)};
        auto b = T.barycentric(x);
        CHECK(T.point(b) == x);
        Rational s(0);
        for (const auto& v : b) s += v;
        CHECK(s == Rational(1));
    }

    TEST_CASE("orientation is enforced") {
        CHECK_THROWS(Simplex({{Rational(0), Rational(0)}, {Rational(0), Rational(1)}, {Rational(1), Rational(0)}}));
        CHECK_THROWS_AS(Simplex({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}, {Rational(2), Rational(2)}}),
                        DegenerateSimplex);
        Simplex S({{Rational(0), Rational(0)}, {Rational(0), Rational(1)}, {Rational(1), Rational(0)}}, Orientation::AutoSwap);
        CHECK(S.orientation() > 0);
    }

    TEST_CASE("centroid projector fixes the face and composes") {
        IncreasingMap T{0, 1, 2, 3}, f{1, 2}, v{2};
        auto P = centroid_projector(T, f);
        CHECK(centroid_projector(f, v).compose_after(P) == centroid_projector(T, v));
    }
}
