// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "exfeec/polyform.hpp"
#include "exfeec/spaces.hpp"
#include "exfeec/star.hpp"

#include <map>
#include <string>
#include <vector>

namespace exfeec {

class GeneratorParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Positions of the labels of `sub` inside `host`, as an increasing map from 0.
IncreasingMap local_positions(const IncreasingMap& sub, const IncreasingMap& host);

// Faces σ ⊆ ξ with dim σ ≥ dim ξ - k (including ξ), by dimension then lex.
std::vector<IncreasingMap> bubble_faces(const IncreasingMap& xi, int k);

// W = ⊗ ω_σ: one component per σ ∈ Z^k(f_ξ); ω_σ has degree k - (dim ξ - dim σ).
struct BubbleTrace {
    IncreasingMap host;
    int k = 0;
    std::map<IncreasingMap, PolyForm> components;
};

// E̊_{σ,ξ} ω_σ = P*_{ξ,σ} ω_σ ∧ λ_σ (dλ)_{ξ∖σ}
PolyForm bubble_extend(const IncreasingMap& sigma, const IncreasingMap& xi, const PolyForm& w_sigma);

// Inverse of Σ_σ E̊_{σ,ξ}, solved from the smallest faces up. Throws
// NotTraceFree when a division leaves a remainder or the final residual is nonzero.
BubbleTrace bubble_decompose(const PolyForm& w);

// Σ_σ E̊_{σ,ξ} W_σ
PolyForm reassemble(const BubbleTrace& W);

// Ė_{τ,ξ}: E̊_{σ,τ} ω_σ ↦ P*_{ξ,σ} ω_σ ∧ λ_σ (dλ)_{τ∖σ}; w is a trace-free form on f_τ.
PolyForm dot_extend(const IncreasingMap& xi, const PolyForm& w);

// Legacy extensions. Labels in tau are global; alpha is indexed by the positions of σ.
struct FullGenerator {
    Rational coeff;
    MultiIndex alpha;  // |α| = r
    IncreasingMap tau;  // k labels in σ
};

struct TrimmedGenerator {
    Rational coeff;
    MultiIndex alpha;  // |α| = r - 1
    IncreasingMap tau;  // k + 1 labels in σ
};

// Σ c λ^α (dλ)_τ, resp. Σ c λ^α φ_τ, on the face whose labels are `host`
PolyForm expand_full(const IncreasingMap& host, int k, const std::vector<FullGenerator>& gens);
PolyForm expand_trimmed(const IncreasingMap& host, int k, const std::vector<TrimmedGenerator>& gens);

// Generator forms of ω on its host; throw GeneratorParseError for forms outside
// P_rΛ^k, resp. P⁻_rΛ^k.
std::vector<FullGenerator> full_generators(const PolyForm& w, int r);
std::vector<TrimmedGenerator> trimmed_generators(const PolyForm& w, int r);

// Text such as "l1 l2 (phi23 + phi13)" with global labels, grouped by monomial;
// alpha is read on the face sigma.
std::string trimmed_text(const IncreasingMap& sigma, const std::vector<TrimmedGenerator>& gens);

// E^{r,k}_{σ,T}: (λ_σ)^α P*_{T,σ,α} (dλ^σ)_τ
PolyForm legacy_extend_full(const IncreasingMap& sigma, const IncreasingMap& T, int r, int k,
                            const std::vector<FullGenerator>& gens);
PolyForm legacy_extend_full(const IncreasingMap& T, int r, const PolyForm& w);
// E^{r,k,-}_{σ,T}: (λ_σ)^α φ_τ
PolyForm legacy_extend_trimmed(const IncreasingMap& sigma, const IncreasingMap& T, int r, int k,
                               const std::vector<TrimmedGenerator>& gens);
PolyForm legacy_extend_trimmed(const IncreasingMap& T, int r, const PolyForm& w);

struct DecompositionComponent {
    IncreasingMap sigma;
    Span local;     // trace-free space on f_σ
    Span extended;  // Ė_{σ,T} of its basis
};

struct GeometricDecomposition {
    IncreasingMap host;
    int k = 0, r = 0;
    Family family = Family::Full;
    std::vector<DecompositionComponent> components;
    std::size_t target_dim = 0, dim_sum = 0, joint = 0;
    bool independent = false;   // joint rank equals the sum of component ranks
    bool dims_match = false;    // the sum equals dim of the target
    bool members_ok = false;    // every extended form lies in the target
    bool spans_target = false;  // joint rank equals dim of the target
    std::string witness;
    bool ok() const { return independent && dims_match && members_ok && spans_target; }
};

// ⊕_{dim σ ≥ k} Ė_{σ,T}[trace-free part of family_r Λ^k(f_σ)]
GeometricDecomposition geometric_decompose(const IncreasingMap& T, int k, Family family, int r);

// Unrestricted source of the component at σ: P⁻_{r-dim+k}Λ^{dim-k}(f_σ) for the
// full family, P_{r-dim+k-1}Λ^{dim-k}(f_σ) for the trimmed one. Empty when the
// degree is out of range.
std::vector<PolyForm> corollary_source(const IncreasingMap& sigma, int k, Family family, int r);

// Span of Ė_{σ,T} ⋆̊_σ applied to corollary_source.
Span corollary_component(const IncreasingMap& T, const IncreasingMap& sigma, int k, Family family, int r);

}  // namespace exfeec
