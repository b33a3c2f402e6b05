// SPDX-License-Identifier: Apache-2.0
#include "exfeec/spaces.hpp"

#include <algorithm>
#include <mutex>

namespace exfeec {

std::string family_name(Family f) {
    switch (f) {
        case Family::Full: return "full";
        case Family::Trimmed: return "trimmed";
        case Family::TraceFreeFull: return "trace-free-full";
        case Family::TraceFreeTrimmed: return "trace-free-trimmed";
        case Family::Custom: return "custom";
    }
    return "custom";
}

Family parse_family(const std::string& s) {
    if (s == "full") return Family::Full;
    if (s == "trimmed") return Family::Trimmed;
    if (s == "trace-free-full") return Family::TraceFreeFull;
    if (s == "trace-free-trimmed") return Family::TraceFreeTrimmed;
    if (s == "custom") return Family::Custom;
    throw std::invalid_argument("unknown family '" + s + "' (expected full or trimmed)");
}

CoordinateLayout::CoordinateLayout(int nvars, int k, int R) : nvars_(nvars), k_(k), R_(R) {
    const int d = nvars - 1;
    for (const auto& rho : enumerate_sigma(1, k, interval_set(1, d))) {
        mask_rank_[rho.mask()] = masks_.size();
        masks_.push_back(rho.mask());
    }
    for (const auto& a : enumerate_multiindices(d, R)) {
        Exps e = pack_exps(a.exponents);
        mono_rank_[e] = monos_.size();
        monos_.push_back(e);
    }
}

std::optional<Vector<Rational>> CoordinateLayout::coordinates(const PolyForm& w) const {
    if (w.nvars() != nvars_ || w.k() != k_) throw std::invalid_argument("coordinates: form shape mismatch");
    PolyForm c(w.host(), w.k());
    try {
        c = canonical_at_degree(w, R_);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    Vector<Rational> v(width());
    for (const auto& [key, x] : c.terms())
        v[mask_rank_.at(key.mask) * monos_.size() + mono_rank_.at(key.exps)] = x;
    return v;
}

PolyForm CoordinateLayout::form(const IncreasingMap& host, const Vector<Rational>& coords) const {
    if (coords.size() != width()) throw std::invalid_argument("form: coordinate size mismatch");
    PolyForm w(host, k_);
    for (std::size_t i = 0; i < masks_.size(); ++i)
        for (std::size_t j = 0; j < monos_.size(); ++j) w.add_term(masks_[i], monos_[j], coords[i * monos_.size() + j]);
    return w;
}

struct Span::Tracked {
    std::once_flag once;
    std::unique_ptr<EchelonBasis<Rational>> basis;
};

namespace {
int default_degree(const std::vector<PolyForm>& gens) {
    int R = 0;
    for (const auto& g : gens) R = std::max(R, eliminate(g, 0).max_degree());
    return R;
}
}  // namespace

Span::Span(IncreasingMap host, int k, Family family, int r, std::vector<PolyForm> generators, int degree)
    : host_(std::move(host)),
      k_(k),
      r_(r),
      family_(family),
      gens_(std::move(generators)),
      layout_(host_.size(), k, degree >= 0 ? degree : default_degree(gens_)),
      tracked_(std::make_shared<Tracked>()) {
    basis_ = std::make_shared<EchelonBasis<Rational>>(layout_.width());
    for (const auto& g : gens_) {
        if (!(g.host() == host_) || g.k() != k_) throw std::invalid_argument("Span: generator on a different host or degree");
        auto c = layout_.coordinates(g);
        if (!c) throw std::invalid_argument("Span: generator degree exceeds the span degree");
        basis_->insert(std::move(*c));
    }
}

std::vector<PolyForm> Span::basis() const {
    std::vector<PolyForm> b;
    for (auto i : basis_->independent()) b.push_back(gens_[i]);
    return b;
}

bool Span::contains(const PolyForm& w) const {
    auto c = layout_.coordinates(w);
    return c && basis_->contains(std::move(*c));
}

std::optional<Vector<Rational>> Span::member(const PolyForm& w) const {
    std::call_once(tracked_->once, [this] {
        tracked_->basis = std::make_unique<EchelonBasis<Rational>>(layout_.width(), true);
        for (auto i : basis_->independent()) tracked_->basis->insert(*layout_.coordinates(gens_[i]));
    });
    auto c = layout_.coordinates(w);
    if (!c) return std::nullopt;
    auto local = tracked_->basis->coordinates(std::move(*c));
    if (!local) return std::nullopt;
    Vector<Rational> out(gens_.size());
    const auto& idx = basis_->independent();
    for (std::size_t j = 0; j < idx.size(); ++j) out[idx[j]] = (*local)[j];
    return out;
}

Span space_full(const IncreasingMap& host, int r, int k) {
    const int d = host.size() - 1;
    if (r < 0) throw std::invalid_argument("space_full: need r >= 0");
    if (k < 0 || k > d) throw std::invalid_argument("space_full: need 0 <= k <= dim");
    std::vector<PolyForm> gens;
    for (const auto& rho : enumerate_sigma(1, k, interval_set(1, d)))
        for (const auto& a : enumerate_multiindices(d, r)) gens.push_back(PolyForm::monomial(host, a, rho));
    return Span(host, k, Family::Full, r, std::move(gens), r);
}

Span space_trimmed(const IncreasingMap& host, int r, int k) {
    const int d = host.size() - 1;
    if (r < 1) throw std::invalid_argument("space_trimmed: need r >= 1");
    if (k < 0 || k > d) throw std::invalid_argument("space_trimmed: need 0 <= k <= dim");
    std::vector<PolyForm> gens;
    for (const auto& rho : enumerate_sigma(0, k, interval_set(0, d))) {
        PolyForm phi = whitney(host, rho);
        for (const auto& a : enumerate_multiindices(d, r - 1))
            gens.push_back(wedge(PolyForm::monomial(host, a), phi));
    }
    return Span(host, k, Family::Trimmed, r, std::move(gens), r);
}

Span space(Family family, const IncreasingMap& host, int r, int k) {
    switch (family) {
        case Family::Full: return space_full(host, r, k);
        case Family::Trimmed: return space_trimmed(host, r, k);
        case Family::TraceFreeFull: return trace_free_subspace(space_full(host, r, k));
        case Family::TraceFreeTrimmed: return trace_free_subspace(space_trimmed(host, r, k));
        case Family::Custom: break;
    }
    throw std::invalid_argument("space: custom family has no generators");
}

std::vector<IncreasingMap> faces_of(const IncreasingMap& host, int lo, int hi) {
    std::vector<IncreasingMap> out;
    const int d = host.size() - 1;
    for (int e = std::max(lo, 0); e <= std::min(hi, d - 1); ++e)
        for (const auto& f : enumerate_sigma(0, e, host.values())) out.push_back(f);
    return out;
}

Span trace_free_subspace(const Span& S) {
    const int k = S.k();
    const int d = S.host().size() - 1;
    const auto faces = faces_of(S.host(), k, d - 1);
    std::vector<CoordinateLayout> layouts;
    std::size_t width = 0;
    for (const auto& f : faces) {
        layouts.emplace_back(f.size(), k, S.degree());
        width += layouts.back().width();
    }
    Family fam = S.family() == Family::Full ? Family::TraceFreeFull
                 : S.family() == Family::Trimmed ? Family::TraceFreeTrimmed
                                                 : S.family();
    const auto basis = S.basis();
    std::vector<PolyForm> kernel_forms;
    EchelonBasis<Rational> traces(width, true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Vector<Rational> row;
        row.reserve(width);
        for (std::size_t f = 0; f < faces.size(); ++f) {
            auto c = layouts[f].coordinates(trace(basis[i], faces[f]));
            row.insert(row.end(), c->begin(), c->end());
        }
        if (traces.insert(std::move(row))) continue;
        const auto& rel = traces.last_relation();
        PolyForm w(S.host(), k);
        for (std::size_t j = 0; j < rel.size(); ++j)
            if (!rel[j].is_zero()) w += rel[j] * basis[j];
        kernel_forms.push_back(std::move(w));
    }
    return Span(S.host(), k, fam, S.r(), std::move(kernel_forms), S.degree());
}

bool span_subset(const Span& a, const Span& b) {
    for (const auto& g : a.basis())
        if (!b.contains(g)) return false;
    return true;
}

bool span_equal(const Span& a, const Span& b) { return span_subset(a, b) && span_subset(b, a); }

std::size_t joint_rank(const std::vector<const Span*>& spans) {
    if (spans.empty()) return 0;
    int R = 0;
    for (auto* s : spans) R = std::max(R, s->degree());
    CoordinateLayout layout(spans.front()->host().size(), spans.front()->k(), R);
    EchelonBasis<Rational> e(layout.width());
    for (auto* s : spans)
        for (const auto& g : s->basis()) e.insert(*layout.coordinates(g));
    return e.rank();
}

}  // namespace exfeec
