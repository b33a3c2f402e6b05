// SPDX-License-Identifier: Apache-2.0
#include "exfeec/star.hpp"

#include <algorithm>

namespace exfeec {

namespace {
std::size_t sz(int i) { return static_cast<std::size_t>(i); }

IncreasingMap local_complement(const IncreasingMap& rho, int d) { return complement(rho, interval_set(0, d)); }

// c with a = c·b, if any
std::optional<Rational> proportionality(const PolyForm& a, const PolyForm& b) {
    PolyForm ca = canonicalize(a), cb = canonicalize(b);
    if (cb.terms().empty()) {
        if (ca.terms().empty()) return Rational(0);
        return std::nullopt;
    }
    const auto& [key, bc] = *cb.terms().begin();
    auto it = ca.terms().find(key);
    Rational c = it == ca.terms().end() ? Rational(0) : it->second / bc;
    if (a == c * b) return c;
    return std::nullopt;
}

std::vector<Rational> field_value(const VectorField& w, const std::vector<Rational>& b) {
    std::vector<Rational> v;
    for (const auto& c : w) v.push_back(evaluate_scalar(c, b));
    return v;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// barycentric sample points on the facet opposite vertex i
std::vector<std::vector<Rational>> facet_samples(int n, int i) {
    std::vector<std::vector<Rational>> pts;
    std::vector<int> verts;
    for (int j = 0; j <= n; ++j)
        if (j != i) verts.push_back(j);
    for (int mask = 1; mask < (1 << verts.size()); ++mask) {
        std::vector<Rational> b(sz(n + 1), Rational(0));
        int cnt = popcount(static_cast<std::uint32_t>(mask));
        for (std::size_t t = 0; t < verts.size(); ++t)
            if (mask & (1 << t)) b[sz(verts[t])] = Rational(1, cnt);
        pts.push_back(std::move(b));
    }
    // one off-centre interior point of the facet
    std::vector<Rational> b(sz(n + 1), Rational(0));
    int total = 0;
    for (std::size_t t = 0; t < verts.size(); ++t) total += static_cast<int>(t) + 1;
    for (std::size_t t = 0; t < verts.size(); ++t) b[sz(verts[t])] = Rational(static_cast<long>(t) + 1, total);
    pts.push_back(std::move(b));
    return pts;
}

void require_proxy_dim(const Simplex& T, const VectorField& u) {
    if (T.dim() != 2 && T.dim() != 3) throw std::invalid_argument("vector proxies need n = 2 or 3");
    if (static_cast<int>(u.size()) != T.dim()) throw std::invalid_argument("vector field must have n components");
}
}  // namespace

BasicSimplex<QuadExt> equilateral_simplex(int n) {
    using Q = QuadExt;
    std::vector<Point<Q>> v;
    switch (n) {
        case 1: v = {{Q(0)}, {Q::sqrt(2)}}; break;
        case 2: {
            Q s = Q::sqrt(3);
            v = {{Q(0), Q(0)}, {Q(1), Q(1)}, {(Q(1) - s) / Q(2), (Q(1) + s) / Q(2)}};
            break;
        }
        case 3: v = {{Q(0), Q(0), Q(0)}, {Q(1), Q(0), Q(1)}, {Q(1), Q(1), Q(0)}, {Q(0), Q(1), Q(1)}}; break;
        case 4: {
            Q a = (Q(1) + Q::sqrt(5)) / Q(4);
            v = {{Q(1), Q(0), Q(0), Q(0)}, {Q(0), Q(1), Q(0), Q(0)}, {Q(0), Q(0), Q(1), Q(0)},
                 {Q(0), Q(0), Q(0), Q(1)}, {a, a, a, a}};
            break;
        }
        default: throw std::invalid_argument("equilateral_simplex: n must be 1..4");
    }
    return BasicSimplex<QuadExt>(std::move(v), Orientation::AutoSwap);
}

PolyForm ring_star(const PolyForm& w) {
    const int dd = w.dim();
    const IncreasingMap& host = w.host();
    PolyForm out(host, dd - w.k());
    for (const auto& rho : enumerate_sigma(0, dd - w.k() - 1, interval_set(0, dd))) {
        PolyForm dl = PolyForm::dlambda(host, rho);
        PolyForm p = top_density(wedge(w, dl));
        if (p.terms().empty()) continue;
        out += wedge(wedge(p, PolyForm::bubble(host, local_complement(rho, dd))), dl);
    }
    return out;
}

Rational ring_inner(const PolyForm& w, const PolyForm& mu) { return integrate(wedge(w, ring_star(mu))); }

Matrix<Rational> ring_gram(const std::vector<PolyForm>& forms) {
    Matrix<Rational> G(forms.size(), forms.size());
    std::vector<PolyForm> stars;
    for (const auto& f : forms) stars.push_back(ring_star(f));
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = 0; j < forms.size(); ++j) G(i, j) = integrate(wedge(forms[i], stars[j]));
    return G;
}

PolyForm cartesian_to_polyform(const AltForm<Rational>& w, const Simplex& T) {
    if (w.n() != T.dim()) throw std::invalid_argument("cartesian_to_polyform: dimension mismatch");
    AltForm<Rational> frame = pullback(T.edge_matrix(), w);
    PolyForm out(IncreasingMap::interval(0, T.dim()), w.k());
    const auto& ms = frame.masks();
    for (std::size_t i = 0; i < ms.size(); ++i) out.add_term(ms[i], 0, frame.coeff_at(i));
    return out;
}

namespace {
IsoReport iso_check(const std::string& name, const IncreasingMap& host, int r, int k, const Span& source,
                    const Span& target) {
    IsoReport rep;
    rep.statement = name;
    rep.n = host.size() - 1;
    rep.k = k;
    rep.r = r;
    rep.source_dim = source.dimension();
    rep.target_dim = target.dimension();
    std::vector<PolyForm> images;
    for (const auto& g : source.basis()) images.push_back(ring_star(g));
    rep.containment = true;
    for (std::size_t i = 0; i < images.size(); ++i)
        if (!target.contains(images[i])) {
            rep.containment = false;
            if (rep.witness.empty()) rep.witness = "image of " + source.basis()[i].str() + " = " + images[i].str();
        }
    Span image(host, target.k(), Family::Custom, target.r(), images, target.degree());
    rep.image_rank = image.dimension();
    rep.injective = rep.image_rank == rep.source_dim;
    rep.dims_equal = rep.source_dim == rep.target_dim;
    rep.surjective = true;
    for (const auto& t : target.basis())
        if (!image.contains(t)) {
            rep.surjective = false;
            if (rep.witness.empty()) rep.witness = "not in image: " + t.str();
        }
    return rep;
}
}  // namespace

IsoReport iso_check_full(const IncreasingMap& host, int r, int k) {
    const int n = host.size() - 1;
    return iso_check("iso_full", host, r, k, space_full(host, r, k),
                     trace_free_subspace(space_trimmed(host, r + k + 1, n - k)));
}

IsoReport iso_check_trimmed(const IncreasingMap& host, int r, int k) {
    const int n = host.size() - 1;
    return iso_check("iso_trimmed", host, r, k, space_trimmed(host, r, k),
                     trace_free_subspace(space_full(host, r + k, n - k)));
}

bool is_trace_free(const PolyForm& w) {
    for (const auto& f : faces_of(w.host(), w.k(), w.dim() - 1))
        if (!trace(w, f).is_zero()) return false;
    return true;
}

VanishingReport vanishing_check(const PolyForm& w) {
    if (!is_trace_free(w)) throw NotTraceFree("vanishing_check: input is not trace-free");
    VanishingReport rep;
    const int dd = w.dim();
    PolyForm s = ring_star(w);
    rep.pointwise = true;
    for (int i = 0; i <= dd; ++i)
        for (const auto& b : facet_samples(dd, i)) {
            ++rep.points_checked;
            if (!evaluate(s, b).is_zero()) {
                rep.pointwise = false;
                if (rep.witness.empty()) rep.witness = "nonzero value at facet " + std::to_string(i) + " sample";
            }
        }
    PolyForm e = eliminate(s, 0);
    e = homogenize(e, std::max(e.max_degree(), 0));
    rep.symbolic = true;
    for (int i = 0; i <= dd; ++i) {
        std::vector<int> keep;
        for (int j = 0; j <= dd; ++j)
            if (j != i) keep.push_back(j);
        if (!restrict_coefficients(e, IncreasingMap(0, keep)).terms().empty()) {
            rep.symbolic = false;
            if (rep.witness.empty()) rep.witness = "coefficients do not vanish on facet " + std::to_string(i);
        }
    }
    return rep;
}

DualReport vandermonde_report(const std::vector<PolyForm>& primal, const std::vector<PolyForm>& dual) {
    DualReport rep;
    rep.trace_free_basis = primal;
    rep.dual_basis = dual;
    rep.vandermonde = Matrix<Rational>(primal.size(), dual.size());
    for (std::size_t i = 0; i < primal.size(); ++i)
        for (std::size_t j = 0; j < dual.size(); ++j) rep.vandermonde(i, j) = integrate(wedge(primal[i], dual[j]));
    rep.square = primal.size() == dual.size();
    if (rep.square) {
        rep.det = determinant(rep.vandermonde);
        rep.invertible = !rep.det.is_zero();
    }
    rep.gram = ring_gram(dual);
    rep.gram_symmetric = rep.gram == rep.gram.transpose();
    rep.gram_positive = true;
    for (const auto& m : leading_principal_minors(rep.gram))
        if (m.sgn() <= 0) rep.gram_positive = false;
    return rep;
}

DualReport dual_vandermonde(const IncreasingMap& host, Family family, int r, int k) {
    const int n = host.size() - 1;
    std::vector<PolyForm> primal, dual;
    if (family == Family::Full) {
        const int rd = r - (n - k);
        // P⁻_sΛ^0 = P_sΛ^0, including s = 0
        if (rd < (k == n ? 0 : 1)) throw EmptyDualSpace("dual_vandermonde: P-_" + std::to_string(rd) + " is empty");
        primal = trace_free_subspace(space_full(host, r, k)).basis();
        dual = k == n ? space_full(host, rd, 0).basis() : space_trimmed(host, rd, n - k).basis();
    } else if (family == Family::Trimmed) {
        const int rd = r - (n - k) - 1;
        if (rd < 0) throw EmptyDualSpace("dual_vandermonde: P_" + std::to_string(rd) + " is empty");
        primal = trace_free_subspace(space_trimmed(host, r, k)).basis();
        dual = space_full(host, rd, n - k).basis();
    } else {
        throw std::invalid_argument("dual_vandermonde: family must be full or trimmed");
    }
    DualReport rep = vandermonde_report(primal, dual);
    rep.family = family;
    rep.n = n;
    rep.k = k;
    rep.r = r;
    return rep;
}

std::vector<Rational> scaled_facet_normal(const Simplex& T, int i) {
    const int n = T.dim();
    std::vector<int> verts;
    for (int j = 0; j <= n; ++j)
        if (j != i) verts.push_back(j);
    auto edge = [&](int a, int b) {
        std::vector<Rational> e;
        for (int c = 0; c < n; ++c) e.push_back(T.vertex(b)[sz(c)] - T.vertex(a)[sz(c)]);
        return e;
    };
    if (n == 2) {
        auto t = edge(verts[0], verts[1]);
        return {t[1], -t[0]};
    }
    if (n == 3) {
        auto a = edge(verts[0], verts[1]), b = edge(verts[0], verts[2]);
        return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    }
    throw std::invalid_argument("scaled_facet_normal: n must be 2 or 3");
}

VectorField proxy_normal_free(const Simplex& T, const VectorField& u) {
    require_proxy_dim(T, u);
    const int n = T.dim();
    const IncreasingMap host = IncreasingMap::interval(0, n);
    VectorField w(sz(n), PolyForm(host, 0));
    const Rational scale = Rational(1) / T.scaled_volume();
    for (int a = 0; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            std::vector<Rational> e;
            for (int c = 0; c < n; ++c) e.push_back(T.vertex(b)[sz(c)] - T.vertex(a)[sz(c)]);
            PolyForm ue(host, 0);
            for (int c = 0; c < n; ++c) ue += e[sz(c)] * u[sz(c)];
            PolyForm t = wedge(ue, PolyForm::bubble(host, IncreasingMap(0, {a, b})));
            for (int c = 0; c < n; ++c) w[sz(c)] += (scale * e[sz(c)]) * t;
        }
    return w;
}

VectorField proxy_tangent_free(const Simplex& T, const VectorField& u) {
    require_proxy_dim(T, u);
    const int n = T.dim();
    const IncreasingMap host = IncreasingMap::interval(0, n);
    VectorField w(sz(n), PolyForm(host, 0));
    const Rational scale = Rational(1) / T.scaled_volume();
    for (int i = 0; i <= n; ++i) {
        auto nu = scaled_facet_normal(T, i);
        std::vector<int> facet;
        for (int j = 0; j <= n; ++j)
            if (j != i) facet.push_back(j);
        PolyForm un(host, 0);
        for (int c = 0; c < n; ++c) un += nu[sz(c)] * u[sz(c)];
        PolyForm t = wedge(un, PolyForm::bubble(host, IncreasingMap(0, facet)));
        for (int c = 0; c < n; ++c) w[sz(c)] += (scale * nu[sz(c)]) * t;
    }
    return w;
}

PolyForm flat(const Simplex& T, const VectorField& u) {
    const int n = T.dim();
    PolyForm out(IncreasingMap::interval(0, n), 1);
    for (int c = 1; c <= n; ++c) out += wedge(u[sz(c - 1)], cartesian_to_polyform(AltForm<Rational>::dx(n, c), T));
    return out;
}

PolyForm flat_star(const Simplex& T, const VectorField& u) {
    const int n = T.dim();
    PolyForm out(IncreasingMap::interval(0, n), n - 1);
    for (int c = 1; c <= n; ++c)
        out += wedge(u[sz(c - 1)], cartesian_to_polyform(hodge(AltForm<Rational>::dx(n, c)), T));
    return out;
}

ProxyReport proxy_normal_free_check(const Simplex& T, const VectorField& u) {
    ProxyReport rep;
    VectorField w = proxy_normal_free(T, u);
    const int n = T.dim();
    rep.boundary_ok = true;
    for (int i = 0; i <= n; ++i) {
        auto nu = scaled_facet_normal(T, i);
        for (const auto& b : facet_samples(n, i))
            if (!dot(field_value(w, b), nu).is_zero()) {
                rep.boundary_ok = false;
                rep.witness = "normal component nonzero on facet " + std::to_string(i);
            }
    }
    auto c = proportionality(ring_star(flat(T, u)), flat_star(T, w));
    rep.relation_found = c.has_value();
    if (c) rep.relation = *c;
    return rep;
}

ProxyReport proxy_tangent_free_check(const Simplex& T, const VectorField& u) {
    ProxyReport rep;
    VectorField w = proxy_tangent_free(T, u);
    const int n = T.dim();
    rep.boundary_ok = true;
    for (int i = 0; i <= n; ++i) {
        std::vector<int> facet;
        for (int j = 0; j <= n; ++j)
            if (j != i) facet.push_back(j);
        for (std::size_t t = 1; t < facet.size(); ++t) {
            std::vector<Rational> tangent;
            for (int c = 0; c < n; ++c) tangent.push_back(T.vertex(facet[t])[sz(c)] - T.vertex(facet[0])[sz(c)]);
            for (const auto& b : facet_samples(n, i))
                if (!dot(field_value(w, b), tangent).is_zero()) {
                    rep.boundary_ok = false;
                    rep.witness = "tangential component nonzero on facet " + std::to_string(i);
                }
        }
    }
    auto c = proportionality(ring_star(flat_star(T, u)), flat(T, w));
    rep.relation_found = c.has_value();
    if (c) rep.relation = *c;
    return rep;
}

PolyForm legacy_h_full(const IncreasingMap& host, const PolyForm& a, const IncreasingMap& rho) {
    const int n = host.size() - 1;
    if (rho.empty() || rho.at_position(0) != 0) throw std::invalid_argument("h^k: need rho(0) = 0");
    if (a.k() != 0 || !(a.host() == host)) throw std::invalid_argument("h^k: coefficient must be a 0-form on the host");
    return wedge(wedge(a, PolyForm::bubble(host, local_complement(rho, n))), whitney(host, rho));
}

PolyForm legacy_h_trimmed(const IncreasingMap& host, const PolyForm& a, const IncreasingMap& rho) {
    const int n = host.size() - 1;
    if (rho.empty()) throw std::invalid_argument("h^{k,-}: empty rho");
    if (a.k() != 0 || !(a.host() == host)) throw std::invalid_argument("h^{k,-}: coefficient must be a 0-form on the host");
    for (const auto& [key, c] : a.terms())
        for (int i = 0; i < rho.at_position(0); ++i)
            if (exps_get(key.exps, i)) throw std::invalid_argument("h^{k,-}: coefficient depends on lambda_" + std::to_string(i));
    return wedge(wedge(a, PolyForm::bubble(host, rho)), PolyForm::dlambda(host, local_complement(rho, n)));
}

LegacyHReport legacy_h_check(const IncreasingMap& host, int r, int k) {
    const int n = host.size() - 1;
    LegacyHReport rep;
    rep.n = n;
    rep.k = k;
    rep.r = r;
    rep.all_signed = true;
    rep.consistent = true;
    auto classify = [](const PolyForm& h, const PolyForm& s) {
        if (h == s) return 1;
        if (h == -s) return -1;
        return 0;
    };
    const IntSet all = interval_set(0, n);
    for (const auto& rho : enumerate_sigma(0, n - k, all)) {
        if (rho.at_position(0) != 0) continue;
        IncreasingMap star = complement(rho, all);
        const int expected = ((k % 2) ? -1 : 1) * sign(star.with_start(0), all);
        for (const auto& alpha : enumerate_multiindices(n, r)) {
            PolyForm a = PolyForm::monomial(host, alpha);
            PolyForm input = wedge(a, PolyForm::dlambda(host, star.with_start(0)));
            int s = classify(legacy_h_full(host, a, rho), ring_star(input));
            rep.full.push_back({input.raw_str(), rho, s});
            if (s == 0) rep.all_signed = false;
            if (s != expected) rep.consistent = false;
        }
    }
    if (r >= 1) {
        for (const auto& rho : enumerate_sigma(0, k, all)) {
            const int expected = sign(rho, all);
            const int lo = rho.at_position(0);
            for (const auto& beta : enumerate_multiindices(n - lo, r - 1)) {
                std::vector<int> e(sz(lo), 0);
                e.insert(e.end(), beta.exponents.begin(), beta.exponents.end());
                PolyForm a = PolyForm::monomial(host, MultiIndex(e));
                PolyForm input = wedge(a, whitney(host, rho));
                int s = classify(legacy_h_trimmed(host, a, rho), ring_star(input));
                rep.trimmed.push_back({input.raw_str(), rho, s});
                if (s == 0) rep.all_signed = false;
                if (s != expected) rep.consistent = false;
            }
        }
    }
    return rep;
}

}  // namespace exfeec
