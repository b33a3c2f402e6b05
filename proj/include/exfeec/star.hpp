// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "exfeec/polyform.hpp"
#include "exfeec/simplex.hpp"
#include "exfeec/spaces.hpp"

#include <string>
#include <vector>

namespace exfeec {

class NotTraceFree : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <class F>
class BasicStarContext {
public:
    explicit BasicStarContext(BasicSimplex<F> T) : T_(std::move(T)) {
        const int n = T_.dim();
        if (T_.orientation() <= 0) throw OrientationError("StarContext: simplex must be positively oriented");
        for (int i = 0; i <= n; ++i) dl_.push_back(T_.dlambda(i).template cast<QuadExt>());
        scaled_ = QuadExt(T_.scaled_volume());
        prefactor_ = scaled_ / QuadExt::sqrt(n + 1);
    }

    const BasicSimplex<F>& simplex() const { return T_; }
    int dim() const { return T_.dim(); }
    IncreasingMap host() const { return IncreasingMap::interval(0, T_.dim()); }
    const AltForm<QuadExt>& dlambda(int i) const { return dl_.at(static_cast<std::size_t>(i)); }
    // n!|T|
    const QuadExt& scaled_volume() const { return scaled_; }
    // n!|T|/sqrt(n+1)
    const QuadExt& prefactor() const { return prefactor_; }

    // ⋆_T ω = n!|T|/sqrt(n+1) Σ_ρ ⋆(ω ∧ (dλ)_ρ) (dλ)_ρ, ρ ∈ Σ([0..n-k-1],[0..n])
    AltForm<QuadExt> star(const AltForm<QuadExt>& w) const {
        const int n = dim();
        if (w.n() != n) throw std::invalid_argument("star_T: dimension mismatch");
        AltForm<QuadExt> out(n, n - w.k());
        for (const auto& rho : enumerate_sigma(0, n - w.k() - 1, interval_set(0, n))) {
            AltForm<QuadExt> dl = dlambda_prod(rho);
            QuadExt s = hodge(wedge(w, dl)).coeff_at(0);
            if (!is_zero(s)) out += s * dl;
        }
        return prefactor_ * out;
    }

    // Pointwise ⋆̊_T: value at a point with barycentric coordinates b of the
    // Cartesian k-form value w_x.
    AltForm<QuadExt> ring_star_pointwise(const AltForm<QuadExt>& w, const std::vector<Rational>& b) const {
        const int n = dim();
        AltForm<QuadExt> out(n, n - w.k());
        for (const auto& rho : enumerate_sigma(0, n - w.k() - 1, interval_set(0, n))) {
            AltForm<QuadExt> dl = dlambda_prod(rho);
            QuadExt s = hodge(wedge(w, dl)).coeff_at(0);
            Rational bubble(1);
            for (int v : complement(rho, interval_set(0, n)).values()) bubble *= b.at(static_cast<std::size_t>(v));
            if (!is_zero(s)) out += (s * QuadExt(bubble)) * dl;
        }
        return scaled_ * out;
    }

private:
    AltForm<QuadExt> dlambda_prod(const IncreasingMap& rho) const {
        AltForm<QuadExt> dl = AltForm<QuadExt>::scalar(dim(), QuadExt(1));
        for (int v : rho.values()) dl = wedge(dl, dl_[static_cast<std::size_t>(v)]);
        return dl;
    }

    BasicSimplex<F> T_;
    std::vector<AltForm<QuadExt>> dl_;
    QuadExt scaled_, prefactor_;
};

using StarContext = BasicStarContext<Rational>;

template <class F>
AltForm<QuadExt> star_T(const BasicStarContext<F>& ctx, const AltForm<QuadExt>& w) {
    return ctx.star(w);
}

// Equilateral simplex with edge length sqrt(2) for n = 1..4, exact in Q(sqrt(n+1)).
BasicSimplex<QuadExt> equilateral_simplex(int n);

// ⋆̊ on the host of w: Σ_ρ p_ρ λ_{ρ*} (dλ)_ρ, where ω ∧ (dλ)_ρ = p_ρ (dλ)_{1..d}.
// The n!|T| factors of the defining formula cancel against
// (dλ)_{1..d} = vol/(d!|T|), so no geometry is needed.
PolyForm ring_star(const PolyForm& w);

// ⟨ω, μ⟩ = ∫ ω ∧ ⋆̊ μ
Rational ring_inner(const PolyForm& w, const PolyForm& mu);
Matrix<Rational> ring_gram(const std::vector<PolyForm>& forms);

// Forms on T from Cartesian values: (dx)_ρ expressed through dλ_1..dλ_n.
PolyForm cartesian_to_polyform(const AltForm<Rational>& w, const Simplex& T);

struct IsoReport {
    std::string statement;
    int n = 0, k = 0, r = 0;
    std::size_t source_dim = 0, target_dim = 0, image_rank = 0;
    bool containment = false;  // every image lies in the target
    bool injective = false;    // rank preserved
    bool dims_equal = false;
    bool surjective = false;   // every target basis form lies in the image span
    std::string witness;
    bool ok() const { return containment && injective && dims_equal && surjective; }
};

// ⋆̊: P_rΛ^k -> P̊⁻_{r+k+1}Λ^{n-k}
IsoReport iso_check_full(const IncreasingMap& host, int r, int k);
// ⋆̊: P⁻_rΛ^k -> P̊_{r+k}Λ^{n-k}
IsoReport iso_check_trimmed(const IncreasingMap& host, int r, int k);

// true when every trace onto a proper face of dimension ≥ k vanishes
bool is_trace_free(const PolyForm& w);

struct VanishingReport {
    bool pointwise = false;
    bool symbolic = false;
    std::size_t points_checked = 0;
    std::string witness;
    bool ok() const { return pointwise && symbolic; }
};

// ⋆̊ω vanishes (all components) on the boundary; throws NotTraceFree.
VanishingReport vanishing_check(const PolyForm& w);

struct DualReport {
    Family family;
    int n = 0, k = 0, r = 0;
    Matrix<Rational> vandermonde;  // rows: trace-free basis, cols: dual forms
    Matrix<Rational> gram;         // ⋆̊ Gram of the dual forms
    bool square = false;
    Rational det;
    bool invertible = false;
    bool gram_symmetric = false;
    bool gram_positive = false;  // all leading principal minors > 0
    std::vector<PolyForm> trace_free_basis, dual_basis;
};

class EmptyDualSpace : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Degrees of freedom φ_i(ω) = ∫ ω ∧ η_i on P̊_rΛ^k (η ∈ P⁻_{r-(n-k)}Λ^{n-k}) or on
// P̊⁻_rΛ^k (η ∈ P_{r-(n-k)-1}Λ^{n-k}).
DualReport dual_vandermonde(const IncreasingMap& host, Family family, int r, int k);
DualReport vandermonde_report(const std::vector<PolyForm>& primal, const std::vector<PolyForm>& dual);

// Vector proxies on T (n = 2, 3). Components are Cartesian, values are 0-forms on T.
using VectorField = std::vector<PolyForm>;

VectorField proxy_normal_free(const Simplex& T, const VectorField& u);
VectorField proxy_tangent_free(const Simplex& T, const VectorField& u);
// u♭ and ⋆(u♭) as forms on T
PolyForm flat(const Simplex& T, const VectorField& u);
PolyForm flat_star(const Simplex& T, const VectorField& u);
// ν̃_i for facet i (opposite vertex i), scaled by (n-1)!|F_i|
std::vector<Rational> scaled_facet_normal(const Simplex& T, int i);

struct ProxyReport {
    bool boundary_ok = false;   // normal (resp. tangential) components vanish at facet samples
    bool relation_found = false;
    Rational relation;          // ⋆̊(input form) = relation · (output form)
    std::string witness;
};

ProxyReport proxy_normal_free_check(const Simplex& T, const VectorField& u);
ProxyReport proxy_tangent_free_check(const Simplex& T, const VectorField& u);

struct LegacyHEntry {
    std::string generator;  // text of the input generator
    IncreasingMap rho;
    int sign = 0;           // h(ω) = sign · ⋆̊ω, or 0 if neither
};

struct LegacyHReport {
    int n = 0, k = 0, r = 0;
    std::vector<LegacyHEntry> full, trimmed;
    bool all_signed = false;      // every output equals ±⋆̊ of its input
    bool consistent = false;      // sign depends only on ρ and agrees with the closed forms
    bool ok() const { return all_signed && consistent; }
};

// h^k on a_ρ (dλ)_{ρ*} (ρ(0) = 0, |ρ| = n-k+1) -> a_ρ λ_{ρ*} φ_ρ
PolyForm legacy_h_full(const IncreasingMap& host, const PolyForm& a, const IncreasingMap& rho);
// h^{k,-} on a λ^α φ_ρ -> a λ_ρ (dλ)_{ρ*}; a depends only on λ_{ρ(0)}..λ_n
PolyForm legacy_h_trimmed(const IncreasingMap& host, const PolyForm& a, const IncreasingMap& rho);
LegacyHReport legacy_h_check(const IncreasingMap& host, int r, int k);

}  // namespace exfeec
