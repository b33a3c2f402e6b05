// SPDX-License-Identifier: Apache-2.0
#include "exfeec/simplex.hpp"

namespace exfeec {

namespace {
std::size_t sz(int i) { return static_cast<std::size_t>(i); }

void require_nested(const IncreasingMap& sigma, const IncreasingMap& xi) {
    if (sigma.empty() || !sigma.range_subset_of(xi))
        throw std::invalid_argument("face " + sigma.str() + " is not contained in " + xi.str());
}
}  // namespace

AffineSimplexMap AffineSimplexMap::compose_after(const AffineSimplexMap& inner) const {
    if (!(inner.target == source)) throw std::invalid_argument("compose: target/source mismatch");
    return {inner.source, target, bary * inner.bary};
}

AffineSimplexMap identity_map(const IncreasingMap& face) {
    return {face, face, Matrix<Rational>::identity(sz(face.size()))};
}

AffineSimplexMap inclusion(const IncreasingMap& sigma, const IncreasingMap& xi) {
    require_nested(sigma, xi);
    Matrix<Rational> M(sz(xi.size()), sz(sigma.size()));
    for (int l = 0; l < sigma.size(); ++l) M(sz(xi.position_of(sigma.at_position(l))), sz(l)) = 1;
    return {sigma, xi, M};
}

AffineSimplexMap centroid_projector(const IncreasingMap& xi, const IncreasingMap& sigma) {
    return weighted_projector(xi, sigma, MultiIndex(std::vector<int>(sz(sigma.size()), 1)));
}

AffineSimplexMap weighted_projector(const IncreasingMap& xi, const IncreasingMap& sigma, const MultiIndex& alpha) {
    require_nested(sigma, xi);
    if (alpha.size() != sigma.size()) throw std::invalid_argument("weighted_projector: multi-index must live on sigma");
    const int total = alpha.order();
    if (total <= 0) throw std::invalid_argument("weighted_projector: zero multi-index");
    Matrix<Rational> M(sz(sigma.size()), sz(xi.size()));
    for (int i = 0; i < xi.size(); ++i) {
        int l = sigma.position_of(xi.at_position(i));
        if (l >= 0) {
            M(sz(l), sz(i)) = 1;
        } else {
            for (int j = 0; j < sigma.size(); ++j) M(sz(j), sz(i)) = Rational(alpha[j], total);
        }
    }
    return {xi, sigma, M};
}

AffineSimplexMap from_cartesian(const Matrix<Rational>& A, const Vector<Rational>& t, const Simplex& src, const Simplex& dst) {
    const int n = src.dim();
    AffineSimplexMap m{IncreasingMap::interval(0, n), IncreasingMap::interval(0, n), Matrix<Rational>(sz(n + 1), sz(n + 1))};
    for (int i = 0; i <= n; ++i) {
        Vector<Rational> y = A * Vector<Rational>(src.vertex(i));
        for (int c = 0; c < n; ++c) y[sz(c)] += t[sz(c)];
        auto lam = dst.barycentric(y);
        for (int j = 0; j <= n; ++j) m.bary(sz(j), sz(i)) = lam[sz(j)];
    }
    return m;
}

}  // namespace exfeec
