#include "exfeec/linalg.hpp"
#include "exfeec/scalar.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace exfeec;

TEST_SUITE("scalars_linalg") {
    TEST_CASE("rational arithmetic stays exact") {
        Rational a(1, 3), b(1, 6);
        CHECK(a + b == Rational(1, 2));
        CHECK((a - b).str() == "1/6");
        CHECK(a * b == Rational(1, 18));
        CHECK(a / b == Rational(2));
        CHECK(Rational::parse("-4/6") == Rational(-2, 3));
        CHECK(Rational::parse("7").is_integer());
        CHECK_THROWS(Rational::parse("1/0"));
        CHECK_THROWS(Rational::parse("x"));
        CHECK(factorial(5) == Rational(120));
        CHECK(binomial(6, 2) == Rational(15));
        CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
    }

    TEST_CASE("quadratic extension") {
        QuadExt s = QuadExt::sqrt(3);
        CHECK(s * s == QuadExt(3));
        CHECK((s * s).is_rational());
        QuadExt x(Rational(1), Rational(2), 5);
        CHECK(x * x.inverse() == QuadExt(1));
        CHECK(x.conjugate() * x == QuadExt(Rational(1 - 20)));
        CHECK(QuadExt(Rational(1), Rational(-1), 2).sgn() < 0);  // 1 - √2
        CHECK(QuadExt(Rational(-1), Rational(1), 2).sgn() > 0);
        CHECK(QuadExt(Rational(3), Rational(-2), 2).sgn() > 0);  // 3 - 2√2
    }

    TEST_CASE("determinant and rank against brute force") {
        std::mt19937 gen(7);
        std::uniform_int_distribution<int> d(-3, 3);
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t m = 1 + static_cast<std::size_t>(trial % 4);
            std::size_t n = 1 + static_cast<std::size_t>((trial / 4) % 4);
            Matrix<Rational> A(m, n);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j) A(i, j) = Rational(d(gen), 1 + (d(gen) + 3) % 3);
            if (trial % 5 == 0 && m > 1)
                for (std::size_t j = 0; j < n; ++j) A(m - 1, j) = A(0, j) * Rational(2);
            CHECK(rank(A) == oracle::minor_rank(A));
            if (m == n) CHECK(determinant(A) == oracle::leibniz_det(A));
            for (const auto& v : kernel_basis(A)) {
                auto Av = A * v;
                CHECK(std::all_of(Av.begin(), Av.end(), [](const Rational& x) { return x.is_zero(); }));
            }
            CHECK(kernel_basis(A).size() == n - rank(A));
        }
    }

    TEST_CASE("inverse, solve and leading minors") {
        Matrix<Rational> A{{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
        auto inv = inverse(A);
        REQUIRE(inv);
        CHECK(A * *inv == Matrix<Rational>::identity(2));
        auto x = solve(A, Vector<Rational>{Rational(3), Rational(4)});
        REQUIRE(x);
        CHECK(A * *x == Vector<Rational>{Rational(3), Rational(4)});
        auto mins = leading_principal_minors(A);
        CHECK(mins == std::vector<Rational>{Rational(2), Rational(5)});
        Matrix<Rational> S{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
        CHECK_FALSE(inverse(S));
        CHECK_FALSE(solve(S, Vector<Rational>{Rational(1), Rational(0)}));
    }

    TEST_CASE("determinant over Q(sqrt 3)") {
        Matrix<QuadExt> A{{QuadExt::sqrt(3), QuadExt(1)}, {QuadExt(1), QuadExt::sqrt(3)}};
        CHECK(determinant(A) == QuadExt(2));
        CHECK(determinant(A) == oracle::leibniz_det(A));
    }

    TEST_CASE("echelon basis tracks membership") {
        EchelonBasis<Rational> B(3);
        CHECK(B.insert({Rational(1), Rational(2), Rational(0)}));
        CHECK(B.insert({Rational(0), Rational(1), Rational(1)}));
        CHECK_FALSE(B.insert({Rational(1), Rational(3), Rational(1)}));
        CHECK(B.rank() == 2);
        CHECK(B.contains({Rational(2), Rational(5), Rational(1)}));
        CHECK_FALSE(B.contains({Rational(0), Rational(0), Rational(1)}));
    }
}
