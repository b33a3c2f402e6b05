// Independent reference computations used by the unit tests.
#pragma once

#include "exfeec/linalg.hpp"
#include "exfeec/scalar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using exfeec::Rational;

inline int inversion_sign(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

// Leibniz expansion
template <class F>
F leibniz_det(const exfeec::Matrix<F>& A) {
    std::vector<int> p(A.rows());
    std::iota(p.begin(), p.end(), 0);
    F total(0);
    do {
        F term(inversion_sign(p));
        for (std::size_t i = 0; i < p.size(); ++i) term *= A(i, static_cast<std::size_t>(p[i]));
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

// largest nonvanishing minor, by brute force over row and column subsets
inline std::size_t minor_rank(const exfeec::Matrix<Rational>& A) {
    const std::size_t m = A.rows(), n = A.cols();
    for (std::size_t r = std::min(m, n); r > 0; --r) {
        std::vector<bool> rs(m, false), cs(n, false);
        std::fill(rs.begin(), rs.begin() + static_cast<long>(r), true);
        do {
            std::fill(cs.begin(), cs.end(), false);
            std::fill(cs.begin(), cs.begin() + static_cast<long>(r), true);
            do {
                exfeec::Matrix<Rational> M(r, r);
                std::size_t a = 0;
                for (std::size_t i = 0; i < m; ++i) {
                    if (!rs[i]) continue;
                    std::size_t b = 0;
                    for (std::size_t j = 0; j < n; ++j)
                        if (cs[j]) M(a, b++) = A(i, j);
                    ++a;
                }
                if (!leibniz_det(M).is_zero()) return r;
            } while (std::prev_permutation(cs.begin(), cs.end()));
        } while (std::prev_permutation(rs.begin(), rs.end()));
    }
    return 0;
}

// Polynomials in Cartesian x_1..x_n, integrated one variable at a time over
// the reference simplex {x_i >= 0, Σ x_i <= 1}.
struct Poly {
    std::map<std::vector<int>, Rational> c;
    int nv = 0;

    static Poly constant(int nv, const Rational& a) {
        Poly p;
        p.nv = nv;
        if (!a.is_zero()) p.c[std::vector<int>(static_cast<std::size_t>(nv), 0)] = a;
        return p;
    }
    static Poly var(int nv, int i) {
        Poly p;
        p.nv = nv;
        std::vector<int> e(static_cast<std::size_t>(nv), 0);
        e[static_cast<std::size_t>(i)] = 1;
        p.c[e] = 1;
        return p;
    }
    Poly operator+(const Poly& o) const {
        Poly r = *this;
        for (const auto& [e, a] : o.c) {
            r.c[e] += a;
            if (r.c[e].is_zero()) r.c.erase(e);
        }
        return r;
    }
    Poly operator*(const Poly& o) const {
        Poly r;
        r.nv = nv;
        for (const auto& [e1, a1] : c)
            for (const auto& [e2, a2] : o.c) {
                std::vector<int> e(e1.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
                r.c[e] += a1 * a2;
                if (r.c[e].is_zero()) r.c.erase(e);
            }
        return r;
    }
    Poly pow(int k) const {
        Poly r = constant(nv, 1);
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }
};

// ∫ over the reference n-simplex of λ^α with λ_0 = 1 - Σ x, λ_i = x_i
inline Rational simplex_integral(const std::vector<int>& alpha) {
    const int n = static_cast<int>(alpha.size()) - 1;
    Poly lam0 = Poly::constant(n, 1);
    for (int i = 0; i < n; ++i) lam0 = lam0 + Poly::constant(n, -1) * Poly::var(n, i);
    Poly f = lam0.pow(alpha[0]);
    for (int i = 0; i < n; ++i) f = f * Poly::var(n, i).pow(alpha[static_cast<std::size_t>(i + 1)]);
    // innermost variable last: x_{n-1} from 0 to 1 - x_0 - ... - x_{n-2}
    for (int v = n - 1; v >= 0; --v) {
        Poly upper = Poly::constant(n, 1);
        for (int j = 0; j < v; ++j) upper = upper + Poly::constant(n, -1) * Poly::var(n, j);
        Poly out = Poly::constant(n, 0);
        for (const auto& [e, a] : f.c) {
            std::vector<int> rest = e;
            int p = rest[static_cast<std::size_t>(v)];
            rest[static_cast<std::size_t>(v)] = 0;
            Poly mono;
            mono.nv = n;
            mono.c[rest] = a / Rational(p + 1);
            out = out + mono * upper.pow(p + 1);
        }
        f = out;
    }
    auto it = f.c.find(std::vector<int>(static_cast<std::size_t>(n), 0));
    return it == f.c.end() ? Rational(0) : it->second;
}

inline long long choose(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return (n == -1 && k == 0) ? 1 : 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// classical dimension counts
inline long long dim_full(int n, int r, int k) { return r < 0 ? 0 : choose(r + n, n) * choose(n, k); }
inline long long dim_trimmed(int n, int r, int k) {
    if (r < 0 || (r == 0 && k > 0)) return 0;
    return choose(r + n, r + k) * choose(r + k - 1, k);
}

}  // namespace oracle
