// SPDX-License-Identifier: Apache-2.0
#include "exfeec/extension.hpp"

#include <algorithm>

namespace exfeec {

namespace {
std::size_t sz(int i) { return static_cast<std::size_t>(i); }

void require_nested(const IncreasingMap& sub, const IncreasingMap& host, const char* what) {
    if (sub.empty() || !sub.range_subset_of(host)) throw std::invalid_argument(std::string(what) + ": face is not contained in the host");
}

IncreasingMap set_difference(const IncreasingMap& a, const IncreasingMap& b) {
    std::vector<int> out;
    for (int v : a.values())
        if (!b.contains_value(v)) out.push_back(v);
    return IncreasingMap(0, out);
}

// λ_σ (dλ)_S on ξ, with σ and S given by global labels
PolyForm bubble_times_dlambda(const IncreasingMap& xi, const IncreasingMap& sigma, const IncreasingMap& S) {
    return wedge(PolyForm::bubble(xi, local_positions(sigma, xi)), PolyForm::dlambda(xi, local_positions(S, xi)));
}

PolyForm extend_with(const IncreasingMap& sigma, const IncreasingMap& xi, const PolyForm& w_sigma, const IncreasingMap& S) {
    PolyForm pulled = sigma == xi ? w_sigma : pullback(centroid_projector(xi, sigma), w_sigma);
    return wedge(pulled, bubble_times_dlambda(xi, sigma, S));
}

// (λ_σ)^α on T for α indexed by the positions of σ
PolyForm face_monomial(const IncreasingMap& T, const IncreasingMap& sigma, const MultiIndex& alpha) {
    std::vector<int> e(sz(T.size()), 0);
    for (int i = 0; i < sigma.size(); ++i) e[sz(T.position_of(sigma.at_position(i)))] = alpha[i];
    return PolyForm::monomial(T, MultiIndex(e));
}

void check_generator(const IncreasingMap& sigma, const MultiIndex& alpha, const IncreasingMap& tau, int order, int tau_size,
                     const char* what) {
    if (alpha.size() != sigma.size()) throw GeneratorParseError(std::string(what) + ": multi-index must live on the face");
    if (alpha.order() != order)
        throw GeneratorParseError(std::string(what) + ": |alpha| must be " + std::to_string(order) + ", got " + alpha.str());
    if (tau.size() != tau_size || !tau.range_subset_of(sigma))
        throw GeneratorParseError(std::string(what) + ": bad form index " + tau.str());
}
}  // namespace

IncreasingMap local_positions(const IncreasingMap& sub, const IncreasingMap& host) {
    std::vector<int> pos;
    for (int v : sub.values()) {
        int p = host.position_of(v);
        if (p < 0) throw std::invalid_argument("local_positions: label " + std::to_string(v) + " not in " + host.str());
        pos.push_back(p);
    }
    return IncreasingMap(0, pos);
}

std::vector<IncreasingMap> bubble_faces(const IncreasingMap& xi, int k) {
    const int d = xi.size() - 1;
    std::vector<IncreasingMap> out;
    for (int e = std::max(d - k, 0); e <= d; ++e)
        for (const auto& f : enumerate_sigma(0, e, xi.values())) out.push_back(f);
    return out;
}

PolyForm bubble_extend(const IncreasingMap& sigma, const IncreasingMap& xi, const PolyForm& w_sigma) {
    require_nested(sigma, xi, "bubble_extend");
    if (!(w_sigma.host() == sigma)) throw std::invalid_argument("bubble_extend: form does not live on " + sigma.str());
    const int gap = xi.size() - sigma.size();
    if (w_sigma.k() + gap > xi.size() - 1)
        throw std::invalid_argument("bubble_extend: degree " + std::to_string(w_sigma.k()) + " too high for the face");
    return extend_with(sigma, xi, w_sigma, set_difference(xi, sigma));
}

BubbleTrace bubble_decompose(const PolyForm& w) {
    const IncreasingMap xi = w.host();
    const int k = w.k();
    BubbleTrace W{xi, k, {}};
    PolyForm residual = w;
    const int d = xi.size() - 1;
    for (int e = std::max(d - k, 0); e <= d; ++e) {
        std::vector<std::pair<IncreasingMap, PolyForm>> level;
        for (const auto& sigma : enumerate_sigma(0, e, xi.values())) {
            const IncreasingMap loc = local_positions(sigma, xi);
            const IncreasingMap rest = set_difference(xi, sigma);
            const std::uint32_t rest_mask = local_positions(rest, xi).mask();
            PolyForm restricted = eliminate(restrict_coefficients(residual, loc), loc.at_position(0));
            // per form index, the coefficient as a polynomial on f_σ
            std::map<std::uint32_t, PolyForm> coeffs;
            for (const auto& [key, c] : restricted.terms()) {
                Exps ex = 0;
                for (int p = 0; p < loc.size(); ++p)
                    ex |= static_cast<Exps>(exps_get(key.exps, loc.at_position(p))) << (8 * p);
                coeffs.try_emplace(key.mask, PolyForm(sigma, 0)).first->second.add_term(0, ex, c);
            }
            PolyForm comp(sigma, k - rest.size());
            for (auto& [mask, p] : coeffs) {
                if ((mask & rest_mask) != rest_mask) {
                    if (!p.is_zero()) throw NotTraceFree("bubble_decompose: nonzero value on " + sigma.str() + " outside its bubble");
                    continue;
                }
                const std::uint32_t hat = mask & ~rest_mask;
                const int sgn = merge_sign(hat, rest_mask);
                std::uint32_t hat_local = 0;
                for (int p2 = 0; p2 < loc.size(); ++p2)
                    if (hat & (1u << loc.at_position(p2))) hat_local |= 1u << p2;
                PolyForm h = homogenize(p, std::max(p.max_degree(), loc.size()));
                for (const auto& [key, c] : h.terms()) {
                    Exps q = key.exps;
                    for (int p2 = 0; p2 < loc.size(); ++p2) {
                        if (exps_get(q, p2) == 0)
                            throw NotTraceFree("bubble_decompose: coefficient on " + sigma.str() + " is not divisible by its bubble");
                        q -= exps_unit(p2);
                    }
                    comp.add_term(hat_local, q, sgn > 0 ? c : -c);
                }
            }
            level.emplace_back(sigma, std::move(comp));
        }
        for (auto& [sigma, comp] : level) {
            if (!comp.terms().empty()) residual -= bubble_extend(sigma, xi, comp);
            W.components.emplace(sigma, std::move(comp));
        }
    }
    if (!residual.is_zero()) throw NotTraceFree("bubble_decompose: residual " + residual.str() + " after the sweep");
    return W;
}

PolyForm reassemble(const BubbleTrace& W) {
    PolyForm out(W.host, W.k);
    for (const auto& [sigma, c] : W.components) out += bubble_extend(sigma, W.host, c);
    return out;
}

PolyForm dot_extend(const IncreasingMap& xi, const PolyForm& w) {
    const IncreasingMap tau = w.host();
    require_nested(tau, xi, "dot_extend");
    PolyForm out(xi, w.k());
    const BubbleTrace W = bubble_decompose(w);
    for (const auto& [sigma, c] : W.components)
        if (!c.terms().empty()) out += extend_with(sigma, xi, c, set_difference(tau, sigma));
    return out;
}

PolyForm expand_full(const IncreasingMap& host, int k, const std::vector<FullGenerator>& gens) {
    PolyForm out(host, k);
    for (const auto& g : gens) {
        check_generator(host, g.alpha, g.tau, g.alpha.order(), k, "expand_full");
        out += PolyForm::monomial(host, g.alpha, local_positions(g.tau, host), g.coeff);
    }
    return out;
}

PolyForm expand_trimmed(const IncreasingMap& host, int k, const std::vector<TrimmedGenerator>& gens) {
    PolyForm out(host, k);
    for (const auto& g : gens) {
        check_generator(host, g.alpha, g.tau, g.alpha.order(), k + 1, "expand_trimmed");
        out += g.coeff * wedge(PolyForm::monomial(host, g.alpha), whitney(host, local_positions(g.tau, host)));
    }
    return out;
}

std::vector<FullGenerator> full_generators(const PolyForm& w, int r) {
    PolyForm c(w.host(), w.k());
    try {
        c = canonical_at_degree(w, r);
    } catch (const std::invalid_argument&) {
        throw GeneratorParseError("full_generators: form has degree above " + std::to_string(r));
    }
    std::vector<FullGenerator> out;
    for (const auto& [key, x] : c.terms()) {
        std::vector<int> labels;
        for (int v : IncreasingMap::from_mask(key.mask).values()) labels.push_back(w.host().at_position(v));
        out.push_back({x, MultiIndex(unpack_exps(key.exps, w.nvars())), IncreasingMap(0, labels)});
    }
    return out;
}

std::vector<TrimmedGenerator> trimmed_generators(const PolyForm& w, int r) {
    const IncreasingMap& host = w.host();
    const int d = host.size() - 1;
    if (r < 1) throw GeneratorParseError("trimmed_generators: need r >= 1");
    Span S = space_trimmed(host, r, w.k());
    auto coords = S.member(w);
    if (!coords) throw GeneratorParseError("trimmed_generators: form is not in the trimmed space of degree " + std::to_string(r));
    std::vector<TrimmedGenerator> out;
    std::size_t i = 0;
    for (const auto& rho : enumerate_sigma(0, w.k(), interval_set(0, d))) {
        std::vector<int> labels;
        for (int v : rho.values()) labels.push_back(host.at_position(v));
        for (const auto& a : enumerate_multiindices(d, r - 1)) {
            const Rational& x = (*coords)[i++];
            if (!x.is_zero()) out.push_back({x, a, IncreasingMap(0, labels)});
        }
    }
    return out;
}

std::string trimmed_text(const IncreasingMap& sigma, const std::vector<TrimmedGenerator>& gens) {
    if (gens.empty()) return "0";
    std::vector<MultiIndex> order;
    std::map<MultiIndex, std::vector<const TrimmedGenerator*>> groups;
    for (const auto& g : gens) {
        if (!groups.count(g.alpha)) order.push_back(g.alpha);
        groups[g.alpha].push_back(&g);
    }
    std::string s;
    for (const auto& a : order) {
        const auto& list = groups[a];
        std::string mono;
        for (int i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            if (!mono.empty()) mono += " ";
            mono += "l" + std::to_string(sigma.at_position(i));
            if (a[i] > 1) mono += "^" + std::to_string(a[i]);
        }
        std::string inner;
        for (const auto* g : list) {
            std::string phi = "phi";
            for (int v : g->tau.values()) phi += std::to_string(v);
            std::string c;
            if (g->coeff == Rational(1)) c = "";
            else if (g->coeff == Rational(-1)) c = "-";
            else c = g->coeff.str() + " ";
            if (!inner.empty()) inner += (c.size() && c[0] == '-') ? " - " : " + ";
            if (!c.empty() && c[0] == '-') c.erase(0, 1);
            inner += c + phi;
        }
        if (!s.empty()) s += " + ";
        s += mono.empty() ? "" : mono + " ";
        s += list.size() > 1 ? "(" + inner + ")" : inner;
    }
    return s;
}

PolyForm legacy_extend_full(const IncreasingMap& sigma, const IncreasingMap& T, int r, int k,
                            const std::vector<FullGenerator>& gens) {
    require_nested(sigma, T, "legacy_extend_full");
    PolyForm out(T, k);
    for (const auto& g : gens) {
        check_generator(sigma, g.alpha, g.tau, r, k, "legacy_extend_full");
        PolyForm dl = PolyForm::dlambda(sigma, local_positions(g.tau, sigma));
        AffineSimplexMap P = g.alpha.order() > 0 ? weighted_projector(T, sigma, g.alpha) : centroid_projector(T, sigma);
        out += g.coeff * wedge(face_monomial(T, sigma, g.alpha), pullback(P, dl));
    }
    return out;
}

PolyForm legacy_extend_full(const IncreasingMap& T, int r, const PolyForm& w) {
    return legacy_extend_full(w.host(), T, r, w.k(), full_generators(w, r));
}

PolyForm legacy_extend_trimmed(const IncreasingMap& sigma, const IncreasingMap& T, int r, int k,
                               const std::vector<TrimmedGenerator>& gens) {
    require_nested(sigma, T, "legacy_extend_trimmed");
    PolyForm out(T, k);
    for (const auto& g : gens) {
        check_generator(sigma, g.alpha, g.tau, r - 1, k + 1, "legacy_extend_trimmed");
        out += g.coeff * wedge(face_monomial(T, sigma, g.alpha), whitney(T, local_positions(g.tau, T)));
    }
    return out;
}

PolyForm legacy_extend_trimmed(const IncreasingMap& T, int r, const PolyForm& w) {
    return legacy_extend_trimmed(w.host(), T, r, w.k(), trimmed_generators(w, r));
}

GeometricDecomposition geometric_decompose(const IncreasingMap& T, int k, Family family, int r) {
    if (family != Family::Full && family != Family::Trimmed)
        throw std::invalid_argument("geometric_decompose: family must be full or trimmed");
    GeometricDecomposition G;
    G.host = T;
    G.k = k;
    G.r = r;
    G.family = family;
    const int n = T.size() - 1;
    Span target = space(family, T, r, k);
    G.target_dim = target.dimension();
    G.members_ok = true;
    std::vector<PolyForm> all;
    for (int e = k; e <= n; ++e) {
        for (const auto& sigma : enumerate_sigma(0, e, T.values())) {
            Span local = trace_free_subspace(space(family, sigma, r, k));
            std::vector<PolyForm> ext;
            for (const auto& b : local.basis()) {
                PolyForm x = dot_extend(T, b);
                if (G.members_ok && !target.contains(x)) {
                    G.members_ok = false;
                    G.witness = "extension from " + sigma.str() + " outside the target: " + x.str();
                }
                ext.push_back(x);
                all.push_back(x);
            }
            G.dim_sum += local.dimension();
            Span extended(T, k, Family::Custom, r, std::move(ext));
            G.components.push_back({sigma, std::move(local), std::move(extended)});
        }
    }
    Span joint(T, k, Family::Custom, r, std::move(all));
    G.joint = joint.dimension();
    G.independent = G.joint == G.dim_sum;
    G.dims_match = G.dim_sum == G.target_dim;
    G.spans_target = G.joint == G.target_dim && G.members_ok;
    if (G.witness.empty() && !G.ok())
        G.witness = "joint rank " + std::to_string(G.joint) + ", component sum " + std::to_string(G.dim_sum) + ", target " +
                    std::to_string(G.target_dim);
    return G;
}

std::vector<PolyForm> corollary_source(const IncreasingMap& sigma, int k, Family family, int r) {
    const int dim = sigma.size() - 1;
    const int j = dim - k;
    if (j < 0) return {};
    if (family == Family::Full) {
        const int s = r - dim + k;
        if (j == 0 && s >= 0) return space_full(sigma, s, 0).basis();
        if (s < 1) return {};
        return space_trimmed(sigma, s, j).basis();
    }
    if (family == Family::Trimmed) {
        const int s = r - dim + k - 1;
        if (s < 0) return {};
        return space_full(sigma, s, j).basis();
    }
    throw std::invalid_argument("corollary_source: family must be full or trimmed");
}

Span corollary_component(const IncreasingMap& T, const IncreasingMap& sigma, int k, Family family, int r) {
    std::vector<PolyForm> ext;
    for (const auto& g : corollary_source(sigma, k, family, r)) ext.push_back(dot_extend(T, ring_star(g)));
    return Span(T, k, Family::Custom, r, std::move(ext));
}

}  // namespace exfeec
