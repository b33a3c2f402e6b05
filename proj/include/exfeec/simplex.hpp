// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "exfeec/combinatorics.hpp"
#include "exfeec/exterior.hpp"
#include "exfeec/linalg.hpp"

#include <stdexcept>
#include <vector>

namespace exfeec {

class DegenerateSimplex : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OrientationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Orientation { RequirePositive, AutoSwap, Any };

template <class F>
using Point = std::vector<F>;

// Oriented n-simplex in R^n.
template <class F>
class BasicSimplex {
public:
    BasicSimplex() = default;
    explicit BasicSimplex(std::vector<Point<F>> vertices, Orientation policy = Orientation::RequirePositive)
        : v_(std::move(vertices)) {
        if (v_.empty()) throw std::invalid_argument("Simplex: no vertices");
        n_ = static_cast<int>(v_.size()) - 1;
        for (const auto& p : v_)
            if (static_cast<int>(p.size()) != n_) throw std::invalid_argument("Simplex: vertex dimension must equal n");
        build();
        if (sgn(det_) == 0) throw DegenerateSimplex("Simplex: affinely dependent vertices");
        if (sgn(det_) < 0) {
            if (policy == Orientation::RequirePositive)
                throw OrientationError("Simplex: negatively oriented vertex order");
            if (policy == Orientation::AutoSwap) {
                std::swap(v_[0], v_[1]);
                build();
            }
        }
    }

    // v_i = 0 for i = 0 and e_i otherwise.
    static BasicSimplex unit(int n) {
        std::vector<Point<F>> v(static_cast<std::size_t>(n + 1), Point<F>(static_cast<std::size_t>(n), F(0)));
        for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i)][static_cast<std::size_t>(i - 1)] = F(1);
        return BasicSimplex(std::move(v));
    }

    int dim() const { return n_; }
    const Point<F>& vertex(int i) const { return v_.at(static_cast<std::size_t>(i)); }
    const std::vector<Point<F>>& vertices() const { return v_; }
    // columns v_i - v_0
    const Matrix<F>& edge_matrix() const { return E_; }
    const Matrix<F>& edge_matrix_inverse() const { return Einv_; }
    const F& signed_det() const { return det_; }
    int orientation() const { return sgn(det_); }
    F signed_volume() const { return det_ / F(factorial(n_)); }
    F volume() const { return abs(signed_volume()); }
    // n!|T|
    F scaled_volume() const { return abs(det_); }

    std::vector<F> barycentric(const Point<F>& x) const {
        if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("barycentric: point dimension mismatch");
        Vector<F> d(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) d[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] - v_[0][static_cast<std::size_t>(i)];
        Vector<F> y = Einv_ * d;
        std::vector<F> lam(static_cast<std::size_t>(n_ + 1));
        F s(1);
        for (int i = 1; i <= n_; ++i) {
            lam[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i - 1)];
            s -= y[static_cast<std::size_t>(i - 1)];
        }
        lam[0] = s;
        return lam;
    }

    Point<F> point(const std::vector<F>& bary) const {
        if (static_cast<int>(bary.size()) != n_ + 1) throw std::invalid_argument("point: barycentric size mismatch");
        Point<F> x(static_cast<std::size_t>(n_), F(0));
        for (int i = 0; i <= n_; ++i)
            for (int c = 0; c < n_; ++c) x[static_cast<std::size_t>(c)] += bary[static_cast<std::size_t>(i)] * v_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
        return x;
    }

    Point<F> centroid() const {
        std::vector<F> b(static_cast<std::size_t>(n_ + 1), F(1) / F(n_ + 1));
        return point(b);
    }

    // Constant gradient dλ_i as a Cartesian 1-form.
    AltForm<F> dlambda(int i) const {
        AltForm<F> w(n_, 1);
        if (i == 0) {
            for (int j = 1; j <= n_; ++j) w -= dlambda(j);
            return w;
        }
        for (int c = 0; c < n_; ++c) w.coeff_at(static_cast<std::size_t>(c)) = Einv_(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(c));
        return w;
    }

    // (dλ)_ρ
    AltForm<F> dlambda(const IncreasingMap& rho) const {
        AltForm<F> w = AltForm<F>::scalar(n_, F(1));
        for (int v : rho.values()) w = wedge(w, dlambda(v));
        return w;
    }

    // Cartesian gradient of every λ_i as rows of an (n+1) × n matrix.
    Matrix<F> gradients() const {
        Matrix<F> g(static_cast<std::size_t>(n_ + 1), static_cast<std::size_t>(n_));
        for (int i = 0; i <= n_; ++i) {
            auto d = dlambda(i);
            for (int c = 0; c < n_; ++c) g(static_cast<std::size_t>(i), static_cast<std::size_t>(c)) = d.coeff_at(static_cast<std::size_t>(c));
        }
        return g;
    }

    template <class G>
    BasicSimplex<G> cast() const {
        std::vector<Point<G>> w;
        for (const auto& p : v_) {
            Point<G> q;
            for (const auto& x : p) q.push_back(G(x));
            w.push_back(std::move(q));
        }
        return BasicSimplex<G>(std::move(w), Orientation::Any);
    }

private:
    void build() {
        E_ = Matrix<F>(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
        for (int i = 1; i <= n_; ++i)
            for (int c = 0; c < n_; ++c)
                E_(static_cast<std::size_t>(c), static_cast<std::size_t>(i - 1)) = v_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] - v_[0][static_cast<std::size_t>(c)];
        det_ = n_ == 0 ? F(1) : determinant(E_);
        if (sgn(det_) != 0) Einv_ = n_ == 0 ? Matrix<F>() : *inverse(E_);
    }

    int n_ = 0;
    std::vector<Point<F>> v_;
    Matrix<F> E_, Einv_;
    F det_;
};

using Simplex = BasicSimplex<Rational>;

// Checks (dλ)_{π∖π(i)} = (-1)^i sign(π)/(n!|T|) vol for a permutation π of [0..n].
template <class F>
bool oriented_volume_identity(const BasicSimplex<F>& T, const std::vector<int>& pi, int i) {
    const int n = T.dim();
    if (static_cast<int>(pi.size()) != n + 1) throw std::invalid_argument("oriented_volume_identity: bad permutation");
    AltForm<F> lhs = AltForm<F>::scalar(n, F(1));
    for (int j = 0; j <= n; ++j)
        if (j != i) lhs = wedge(lhs, T.dlambda(pi[static_cast<std::size_t>(j)]));
    F c = F((i % 2 ? -1 : 1) * permutation_sign(pi)) / T.scaled_volume();
    return lhs == c * AltForm<F>::volume(n);
}

// An affine map between two labelled faces, stored by its action on
// barycentric coordinates: column i holds the target barycentric coordinates
// of the image of source vertex i. Labels are global vertex numbers.
struct AffineSimplexMap {
    IncreasingMap source;
    IncreasingMap target;
    Matrix<Rational> bary;  // |target| × |source|

    AffineSimplexMap compose_after(const AffineSimplexMap& inner) const;  // this ∘ inner
    bool operator==(const AffineSimplexMap&) const = default;
};

AffineSimplexMap identity_map(const IncreasingMap& face);
// i_{σ,ξ}: f_σ -> f_ξ
AffineSimplexMap inclusion(const IncreasingMap& sigma, const IncreasingMap& xi);
// P_{ξ,σ}: f_ξ -> f_σ, vertices outside σ go to the centroid of f_σ
AffineSimplexMap centroid_projector(const IncreasingMap& xi, const IncreasingMap& sigma);
// P_{ξ,σ,α}: vertices outside σ go to (1/|α|) Σ α(i) v_{σ(i)}
AffineSimplexMap weighted_projector(const IncreasingMap& xi, const IncreasingMap& sigma, const MultiIndex& alpha);

// Cartesian form x -> A x + t of a full-dimensional map between two simplices.
template <class F>
struct CartesianAffine {
    Matrix<F> A;
    Vector<F> t;
};

template <class F>
CartesianAffine<F> cartesian(const AffineSimplexMap& m, const BasicSimplex<F>& src, const BasicSimplex<F>& dst) {
    const int n = src.dim();
    if (dst.dim() != n || m.source.size() != n + 1 || m.target.size() != n + 1)
        throw std::invalid_argument("cartesian: maps between full simplices only");
    std::vector<Point<F>> img;
    for (int i = 0; i <= n; ++i) {
        std::vector<F> b;
        for (int j = 0; j <= n; ++j) b.push_back(F(m.bary(static_cast<std::size_t>(j), static_cast<std::size_t>(i))));
        img.push_back(dst.point(b));
    }
    Matrix<F> D(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int c = 0; c < n; ++c) D(static_cast<std::size_t>(c), static_cast<std::size_t>(i - 1)) = img[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] - img[0][static_cast<std::size_t>(c)];
    CartesianAffine<F> out;
    out.A = D * src.edge_matrix_inverse();
    out.t = Vector<F>(static_cast<std::size_t>(n));
    Vector<F> Av0 = out.A * Vector<F>(src.vertex(0));
    for (int c = 0; c < n; ++c) out.t[static_cast<std::size_t>(c)] = img[0][static_cast<std::size_t>(c)] - Av0[static_cast<std::size_t>(c)];
    return out;
}

// Barycentric description of x -> A x + t from src onto dst.
AffineSimplexMap from_cartesian(const Matrix<Rational>& A, const Vector<Rational>& t, const Simplex& src, const Simplex& dst);

}  // namespace exfeec
