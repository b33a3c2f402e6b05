// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "exfeec/linalg.hpp"
#include "exfeec/polyform.hpp"

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace exfeec {

enum class Family { Full, Trimmed, TraceFreeFull, TraceFreeTrimmed, Custom };

std::string family_name(Family f);
Family parse_family(const std::string& s);  // "full" | "trimmed" (and the trace-free names)

// Coordinates of k-forms on a host with nvars vertices in the homogeneous
// degree-R basis λ^α (dλ)_ρ, |α| = R, ρ ⊂ [1..d].
class CoordinateLayout {
public:
    CoordinateLayout(int nvars, int k, int R);
    int degree() const { return R_; }
    std::size_t width() const { return masks_.size() * monos_.size(); }
    // nullopt when the true degree of w exceeds R
    std::optional<Vector<Rational>> coordinates(const PolyForm& w) const;
    PolyForm form(const IncreasingMap& host, const Vector<Rational>& coords) const;

private:
    int nvars_, k_, R_;
    std::vector<std::uint32_t> masks_;
    std::vector<Exps> monos_;
    std::unordered_map<std::uint32_t, std::size_t> mask_rank_;
    std::unordered_map<Exps, std::size_t> mono_rank_;
};

class Span {
public:
    Span(IncreasingMap host, int k, Family family, int r, std::vector<PolyForm> generators, int degree = -1);

    const IncreasingMap& host() const { return host_; }
    int k() const { return k_; }
    int r() const { return r_; }
    Family family() const { return family_; }
    int degree() const { return layout_.degree(); }
    const std::vector<PolyForm>& generators() const { return gens_; }
    std::size_t dimension() const { return basis_->rank(); }
    // generators that raised the rank, in order
    std::vector<PolyForm> basis() const;
    const std::vector<std::size_t>& basis_indices() const { return basis_->independent(); }

    bool contains(const PolyForm& w) const;
    // Coordinates over the generator list (zero on dependent generators), or
    // nullopt for a non-member.
    std::optional<Vector<Rational>> member(const PolyForm& w) const;
    std::optional<Vector<Rational>> coordinates(const PolyForm& w) const { return layout_.coordinates(w); }
    const CoordinateLayout& layout() const { return layout_; }

private:
    struct Tracked;
    IncreasingMap host_;
    int k_, r_;
    Family family_;
    std::vector<PolyForm> gens_;
    CoordinateLayout layout_;
    std::shared_ptr<EchelonBasis<Rational>> basis_;
    std::shared_ptr<Tracked> tracked_;
};

// λ^α (dλ)_ρ, |α| = r, ρ ∈ Σ([1..k],[1..d])
Span space_full(const IncreasingMap& host, int r, int k);
// λ^α φ_ρ, |α| = r-1, ρ ∈ Σ([0..k],[0..d])
Span space_trimmed(const IncreasingMap& host, int r, int k);
Span space(Family family, const IncreasingMap& host, int r, int k);

// Kernel of the stacked traces onto every proper face of dimension ≥ k.
Span trace_free_subspace(const Span& S);

// every form of `a` lies in `b`
bool span_subset(const Span& a, const Span& b);
bool span_equal(const Span& a, const Span& b);

// rank of the union of generator lists (all on one host/degree)
std::size_t joint_rank(const std::vector<const Span*>& spans);

// proper faces of the host (global labels) of dimension in [lo, hi]
std::vector<IncreasingMap> faces_of(const IncreasingMap& host, int lo, int hi);

}  // namespace exfeec
