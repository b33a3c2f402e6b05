// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "exfeec/combinatorics.hpp"
#include "exfeec/exterior.hpp"
#include "exfeec/scalar.hpp"
#include "exfeec/simplex.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace exfeec {

constexpr int kMaxVertices = 8;

// Exponents of λ_0..λ_7, one byte each (λ_i in byte i).
using Exps = std::uint64_t;

Exps pack_exps(const std::vector<int>& e);
std::vector<int> unpack_exps(Exps e, int nvars);
int exps_degree(Exps e);
inline int exps_get(Exps e, int i) { return static_cast<int>((e >> (8 * i)) & 0xffu); }
inline Exps exps_unit(int i) { return Exps{1} << (8 * i); }

struct TermKey {
    std::uint32_t mask;  // (dλ)_ρ over local indices
    Exps exps;
    friend bool operator<(const TermKey& a, const TermKey& b) {
        return a.mask != b.mask ? a.mask < b.mask : a.exps < b.exps;
    }
    friend bool operator==(const TermKey&, const TermKey&) = default;
};

// Σ c λ^α (dλ)_ρ on the face with global vertex labels `host`; λ_i and dλ_i
// use local indices 0..d. Terms need not be homogeneous and may contain dλ_0.
class PolyForm {
public:
    using Terms = std::map<TermKey, Rational>;

    PolyForm() = default;
    PolyForm(IncreasingMap host, int k);

    static PolyForm constant(const IncreasingMap& host, const Rational& c);
    static PolyForm lambda(const IncreasingMap& host, int i);
    static PolyForm dlambda(const IncreasingMap& host, int i);
    // (dλ)_ρ for local ρ
    static PolyForm dlambda(const IncreasingMap& host, const IncreasingMap& rho);
    // c λ^α (dλ)_ρ
    static PolyForm monomial(const IncreasingMap& host, const MultiIndex& alpha, const IncreasingMap& rho = {},
                             const Rational& c = Rational(1));
    // λ_σ = Π_{i∈σ} λ_i for local σ
    static PolyForm bubble(const IncreasingMap& host, const IncreasingMap& sigma);

    const IncreasingMap& host() const { return host_; }
    int dim() const { return host_.size() - 1; }
    int nvars() const { return host_.size(); }
    int k() const { return k_; }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    void add_term(std::uint32_t mask, Exps exps, const Rational& c);
    // highest monomial degree among stored terms (-1 when empty)
    int max_degree() const;

    // exact zero test modulo Σλ_i = 1 and Σdλ_i = 0
    bool is_zero() const;

    PolyForm& operator+=(const PolyForm& o);
    PolyForm& operator-=(const PolyForm& o);
    PolyForm& operator*=(const Rational& c);
    PolyForm operator-() const;
    friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
    friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
    friend PolyForm operator*(const Rational& c, PolyForm a) { return a *= c; }
    friend PolyForm operator*(PolyForm a, const Rational& c) { return a *= c; }

    // equality as differential forms on the simplex
    friend bool operator==(const PolyForm& a, const PolyForm& b);

    // canonical text with global vertex labels; calls canonicalize first
    std::string str() const;
    // the stored terms verbatim
    std::string raw_str() const;

private:
    void check_compatible(const PolyForm& o, const char* op) const;

    IncreasingMap host_;
    int k_ = 0;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const PolyForm& w);

PolyForm wedge(const PolyForm& a, const PolyForm& b);
// product of a 0-form with a form
inline PolyForm operator*(const PolyForm& a, const PolyForm& b) { return wedge(a, b); }

PolyForm d(const PolyForm& w);

// Rewrites dλ_e = -Σ_{i≠e} dλ_i so that no term contains dλ_e.
PolyForm eliminate(const PolyForm& w, int e);
// Multiplies every term of degree δ by (Σλ_i)^{R-δ}; requires R ≥ max_degree.
PolyForm homogenize(const PolyForm& w, int R);
// Substitutes λ_0 = 1 - Σ_{i≥1} λ_i (after eliminating dλ_0): unique affine chart form.
PolyForm dehomogenize(const PolyForm& w);
// Degree of the form as a polynomial (−1 for zero).
int true_degree(const PolyForm& w);
// Unique representative: dλ_0 eliminated, homogeneous of the true degree.
PolyForm canonicalize(const PolyForm& w);
// Homogeneous representative of degree R ≥ true degree, dλ_0 eliminated.
PolyForm canonical_at_degree(const PolyForm& w, int R);

// φ*ω for ω on φ.target; result lives on φ.source.
PolyForm pullback(const AffineSimplexMap& phi, const PolyForm& w);
// Tr onto the face σ (global labels, σ ⊆ host).
PolyForm trace(const PolyForm& w, const IncreasingMap& sigma);
// Sets λ_i = 0 for local i outside σ in every coefficient; keeps all dλ.
PolyForm restrict_coefficients(const PolyForm& w, const IncreasingMap& sigma_local);
// Relabels the host: local index i of w becomes the vertex labelled perm[i] in new_host.
PolyForm relabel(const PolyForm& w, const IncreasingMap& new_host, const std::vector<int>& perm);

// φ_ρ for local ρ
PolyForm whitney(const IncreasingMap& host, const IncreasingMap& rho);

// κ_x ω with x given by local barycentric coordinates b (Σb = 1).
PolyForm koszul(const PolyForm& w, const std::vector<Rational>& b);
// κ centered at the centroid of the host
PolyForm koszul_centroid(const PolyForm& w);
// ω⌟v for a constant vector v given by its barycentric differences δ_i = dλ_i(v), Σδ = 0.
PolyForm interior_constant(const PolyForm& w, const std::vector<Rational>& delta);

// ∫ over the positively oriented host of a top-degree form.
Rational integrate(const PolyForm& w);
// Value at a point (local barycentric b) in the tangent frame dλ_1..dλ_d.
AltForm<Rational> evaluate(const PolyForm& w, const std::vector<Rational>& b);
// Coefficient p of (dλ)_{1..d} for a top-degree form, as a 0-form.
PolyForm top_density(const PolyForm& w);

// Frame value (coefficients over dλ_1..dλ_d) converted to Cartesian on T.
AltForm<Rational> frame_to_cartesian(const AltForm<Rational>& v, const Simplex& T);

// Scalar polynomial value at barycentric b.
Rational evaluate_scalar(const PolyForm& w, const std::vector<Rational>& b);

// λ^α as a scalar 0-form (α over local indices, packed).
PolyForm monomial_of(const IncreasingMap& host, Exps e);

}  // namespace exfeec
